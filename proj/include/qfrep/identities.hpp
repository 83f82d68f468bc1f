#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qfrep/rational.hpp"

namespace qfrep {

using Tuple = std::vector<std::pair<std::string, Rational>>;

struct IdentityTrial {
    Tuple tuple;
    Rational lhs, rhs;
    bool exact = false;  // lhs == rhs
};

// One catalogued closed-form identity. evaluate() draws an admissible tuple with the
// supplied generator (nullopt = rejected draw) and returns both sides.
struct IdentityRecord {
    std::string id;                       // "I1".."I13"
    std::string statement;                // the identity in plain notation
    std::vector<std::string> parameters;  // sampled symbols
    std::string constraints;              // admissibility conditions
    std::vector<std::string> depends_on;  // library routines exercised
    std::optional<Rational> known_delta;  // accepted constant lhs/rhs (discriminant-convention delta)
    std::string note;                     // correction applied to the reference form, if any
    std::function<std::optional<IdentityTrial>(std::mt19937_64&)> evaluate;
};

struct IdentityReport {
    std::string id;
    std::string statement;
    int trials = 0;
    int passed = 0;
    std::optional<Rational> convention_delta;  // set when lhs = delta * rhs (delta != 1) on every trial
    std::string note;
    std::vector<IdentityTrial> counterexamples;
    bool ok = false;
};

std::vector<IdentityRecord> identity_catalog();
// Runs `trials` admissible random trials (numerators in [-20, 20], denominators in [1, 20]).
// Throws Domain if no admissible tuple is found within 10^4 draws.
IdentityReport verify_identity(const std::string& id, int trials, std::uint64_t seed);

// Random rational with numerator in [-20, 20] and denominator in [1, 20] (nonzero when requested).
Rational random_rational(std::mt19937_64& rng, bool nonzero = true);

}  // namespace qfrep
