#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfrep/constructions.hpp"
#include "qfrep/elliptic.hpp"

namespace qfrep {

// Which value must be pairwise distinct across a stream.
enum class ProjectionKey {
    Coordinate,  // X for quartic surfaces, Y for cubic surfaces
    FormValue    // a p^2 + b q^2 + c
};

struct StreamPoint {
    SurfacePoint point;
    long multiple = 0;     // n with the aux-curve point = [n] gen (base point of the surface: 0, from_base)
    bool from_base = false;
    QuarticPoint aux_point;  // point of the reduced auxiliary model fed to psi
};

struct PointStream {
    Family family;
    WCurve curve;
    WPoint generator;
    std::vector<StreamPoint> emitted;
    std::vector<Rational> distinct_projections;
    std::vector<long> skipped_multiples;  // multiples at poles / exceptional points
    std::vector<std::string> skip_reasons;
};

// Streams verified surface points from multiples n = 0, 1, -1, 2, -2, ... of gen on the
// Weierstrass model of con.aux given by `model`. The surface base point (when present) is
// emitted first. Refuses torsion generators; fails if fewer than `count` distinct
// projections appear within the first 12 * count multiples.
PointStream generate(const Construction& con, const QuarticModel& model, const WPoint& gen, int count,
                     ProjectionKey key = ProjectionKey::Coordinate);

// Some (p, q) with a p^2 + b q^2 + c = value, |numerators|, denominators <= height; q >= 0.
std::optional<std::pair<Rational, Rational>> represent_bounded(const Rational& value, const QuadForm& form,
                                                               long height);

// Y^2 = (X^2 + 1)(X^2 + 11) with the generator (1/2, 15/4).
struct CzRow {
    long k;
    Rational X, Y;
    std::size_t x_bits, y_bits;
    std::optional<std::pair<Rational, Rational>> representation;  // Y/15 = P^2 - 5Q^2 (bounded probe)
};
struct CzReport {
    bool generator_on_curve = false;
    bool generator_infinite_order = false;
    std::vector<CzRow> rows;
    UniPoly sextic;              // eliminated sextic for the 15(P^2 - 5Q^2) surface
    Rational sextic_discriminant;  // nonzero: the auxiliary curve has genus 2
    long probe_height = 0;
};
CzReport cz_demo(int n, long probe_height = 60);

// Integer points of v^2 = u(u+2)(u+6) with |u| <= range and v >= 0, u ascending.
struct IntegerPointSearch {
    std::vector<std::pair<Integer, Integer>> points;
    std::vector<std::pair<Integer, Integer>> square_classes;  // (u, squarefree part of 2u), u != 0
    std::vector<Integer> positive_classes;                    // distinct classes over u > 0, ascending
};
IntegerPointSearch search_integer_points_u(long range);

}  // namespace qfrep
