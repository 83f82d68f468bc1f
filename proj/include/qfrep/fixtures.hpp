#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfrep/constructions.hpp"
#include "qfrep/serialize.hpp"

namespace qfrep {

struct FixtureOptions {
    int count = 0;         // number of points to stream (0: fixture default)
    long range = 100000;   // integer-point search range (rem5.3)
};

struct FixtureCheck {
    std::string name;
    bool ok;
};

struct FixtureResult {
    std::string id;
    std::string title;
    std::vector<FixtureCheck> checks;
    std::vector<std::string> lines;  // human-readable report
    Json data;
    bool ok() const;
};

std::vector<std::string> fixture_ids();
// Runs a fixture end-to-end. InvalidArgument for unknown ids.
FixtureResult reproduce(const std::string& id, const FixtureOptions& opt = {});

// Closed-form specialized maps for the worked instances, in the coordinates of their
// reference auxiliary curves. They serve as independent references for psi.
// Y^2 = X^4 + l family, curve w^2 = 2(l - U^4): (U, w) -> (w/2U, U, w/2U).
SurfacePoint reference_map_ex2_4(const Rational& U, const Rational& w);
// (p^2+3q^2)^2 = X^4 - 15/2 X^2 + 15, curve V^2 = 2(5 + 30u^2 - 3u^4).
SurfacePoint reference_map_ex3_2(const Rational& u, const Rational& V);
// (p^2+2q^2)^2 = X^4 - 2X^2 + 10, curve U^2 = -9 + 4v^2 + 4v^4.
SurfacePoint reference_map_ex3_3(const Rational& v, const Rational& U);
// (p^2+q^2+1)^2 = 9 + 24X' + 288X'^2 + 16X'^3 + 4X'^4, curve V^2 = 130 + 63U^2 - 3U^4; returns X'.
SurfacePoint reference_map_ex4_3(const Rational& U, const Rational& V);
// Y^2 = f(p^2 + b q^2), f = X^3 + 2X^2 - 128X + 480, curve W^2 = 2b(bU^2+1)(bU^2+3).
SurfacePoint reference_map_ex5_2(const Rational& b, const Rational& U, const Rational& W);

}  // namespace qfrep
