#pragma once

#include <optional>
#include <string>

#include "qfrep/poly.hpp"
#include "qfrep/rational.hpp"

namespace qfrep {

// A point certifying local solvability.
//  p-adic: U is known modulo p^precision (U = 1/V for points with v_p(U) < 0, flagged by
//  reciprocal; V = 0 is the point at infinity), and g(U) is a nonzero p-adic square on that
//  disc or the disc contains a Hensel root of g.
//  real: g(U) >= 0 for some U in [lo, hi] (lo == hi for an exact rational witness).
struct LocalWitness {
    Rational U;
    bool reciprocal = false;
    long precision = 0;
    std::string reason;
    Rational lo, hi;
};

struct LocalVerdict {
    std::string place;  // decimal prime or "real"
    bool solvable = false;
    std::optional<LocalWitness> witness;
    long depth_reached = 0;      // deepest disc level visited (p-adic)
    long depth_cap = 0;          // cap in force
    long discs_refuted = 0;      // number of discs closed by a square-class argument
};

// Existence of (U, w) in Q_p^2 (including the points at infinity of the smooth model) with w^2 = g(U).
// depth_override <= 0 uses 2 v_p(Disc g) + 4. Throws Verification when the cap is hit undecided.
LocalVerdict locally_solvable(const UniPoly& g, const Integer& p, long depth_override = 0);
// Existence of a real point: g attains a nonnegative value somewhere on R (or at infinity).
LocalVerdict really_solvable(const UniPoly& g);

}  // namespace qfrep
