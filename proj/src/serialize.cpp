#include "qfrep/serialize.hpp"

#include "qfrep/error.hpp"

namespace qfrep {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw Error(ErrorKind::Parse, "expected a rational as \"num/den\" string or integer, got " + j.dump());
}

Json to_json(const UniPoly& f) {
    Json a = Json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_json(c));
    return a;
}

UniPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of coefficients (ascending degree)");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return UniPoly(std::move(c));
}

Json to_json(const WCurve& E) { return Json{{"a2", to_json(E.a2)}, {"a4", to_json(E.a4)}, {"a6", to_json(E.a6)}}; }

Json to_json(const WPoint& P) {
    if (P.inf) return Json{{"inf", true}};
    return Json{{"x", to_json(P.x)}, {"y", to_json(P.y)}};
}

Json to_json(const QuarticPoint& P) {
    switch (P.kind) {
        case QuarticPoint::Kind::InfPlus: return "inf+";
        case QuarticPoint::Kind::InfMinus: return "inf-";
        case QuarticPoint::Kind::Affine: break;
    }
    return Json{{"U", to_json(P.U)}, {"w", to_json(P.w)}};
}

QuarticPoint quartic_point_from_json(const Json& j) {
    if (j.is_string()) {
        if (j == "inf+") return QuarticPoint::inf_plus();
        if (j == "inf-") return QuarticPoint::inf_minus();
    } else if (j.is_object() && j.contains("U") && j.contains("w") && j.size() == 2) {
        return QuarticPoint::affine(rational_from_json(j.at("U")), rational_from_json(j.at("w")));
    }
    throw Error(ErrorKind::Parse, "expected a quartic point {\"U\":..., \"w\":...} or \"inf+\"/\"inf-\", got " + j.dump());
}

Json to_json(const SurfacePoint& P) {
    return Json{{"p", to_json(P.p)}, {"q", to_json(P.q)}, {"coord", to_json(P.coord)}, {"verified", P.verified}};
}

Json to_json(const Construction& con) {
    Json params = Json::object();
    for (const auto& [k, v] : con.params) params[k] = to_json(v);
    Json j{{"family", family_name(con.family)},
           {"params", params},
           {"form", {{"a", to_json(con.form.a)}, {"b", to_json(con.form.b)}, {"c", to_json(con.form.c)}}},
           {"m", to_json(con.m)},
           {"surface_poly", to_json(con.f)},
           {"projection", con.projection == Projection::X ? "X" : "Y"},
           {"aux_formula", to_json(con.aux_formula)},
           {"aux", to_json(con.aux)},
           {"aux_var", con.aux_var},
           {"nu", to_json(con.nu)},
           {"mu", to_json(con.mu)},
           {"lambda", to_json(con.lambda)},
           {"t_order", con.t_order}};
    if (con.base_point) j["base_point"] = to_json(*con.base_point);
    return j;
}

Json to_json(const LocalVerdict& v) {
    Json j{{"place", v.place}, {"solvable", v.solvable}};
    if (v.place != "real") {
        j["depth_reached"] = v.depth_reached;
        j["depth_cap"] = v.depth_cap;
        j["discs_refuted"] = v.discs_refuted;
    }
    if (v.witness) {
        const LocalWitness& w = *v.witness;
        Json wj{{"U", to_json(w.U)}, {"reason", w.reason}};
        if (v.place == "real") {
            wj["lo"] = to_json(w.lo);
            wj["hi"] = to_json(w.hi);
        } else {
            wj["precision"] = w.precision;
            wj["reciprocal"] = w.reciprocal;
        }
        j["witness"] = wj;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

namespace {
Json trial_json(const IdentityTrial& t) {
    Json tuple = Json::object();
    for (const auto& [k, v] : t.tuple) tuple[k] = to_json(v);
    return Json{{"tuple", tuple}, {"lhs", to_json(t.lhs)}, {"rhs", to_json(t.rhs)}};
}
}  // namespace

Json to_json(const IdentityReport& r) {
    Json j{{"id", r.id}, {"statement", r.statement}, {"trials", r.trials}, {"passed", r.passed}, {"ok", r.ok}};
    j["convention_delta"] = r.convention_delta ? to_json(*r.convention_delta) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    Json ce = Json::array();
    for (const auto& t : r.counterexamples) ce.push_back(trial_json(t));
    j["counterexamples"] = ce;
    return j;
}

Json to_json(const PointStream& s, const Construction& con) {
    Json pts = Json::array();
    for (const auto& e : s.emitted) {
        Json p = to_json(e.point);
        p["form_value"] = to_json(form_value(con, e.point));
        p["multiple"] = e.multiple;
        p["from_base"] = e.from_base;
        pts.push_back(p);
    }
    Json skipped = Json::array();
    for (std::size_t i = 0; i < s.skipped_multiples.size(); ++i)
        skipped.push_back(Json{{"multiple", s.skipped_multiples[i]}, {"reason", s.skip_reasons[i]}});
    return Json{{"family", family_name(s.family)},
                {"curve", to_json(s.curve)},
                {"generator", to_json(s.generator)},
                {"points", pts},
                {"skipped", skipped}};
}

Json to_json(const CzReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j{{"k", row.k}, {"X", to_json(row.X)}, {"Y", to_json(row.Y)}, {"x_bits", row.x_bits}, {"y_bits", row.y_bits}};
        if (row.representation)
            j["representation"] = Json{{"P", to_json(row.representation->first)}, {"Q", to_json(row.representation->second)}};
        else
            j["representation"] = nullptr;
        rows.push_back(j);
    }
    return Json{{"generator_on_curve", r.generator_on_curve},
                {"generator_infinite_order", r.generator_infinite_order},
                {"multiples", rows},
                {"probe_height", r.probe_height},
                {"sextic", to_json(r.sextic)},
                {"sextic_discriminant", to_json(r.sextic_discriminant)}};
}

Json to_json(const IntegerPointSearch& s) {
    Json pts = Json::array();
    for (const auto& [u, v] : s.points) pts.push_back(Json{{"u", u.get_str()}, {"v", v.get_str()}});
    Json cls = Json::array();
    for (const auto& [u, c] : s.square_classes) cls.push_back(Json{{"u", u.get_str()}, {"class", c.get_str()}});
    Json pos = Json::array();
    for (const auto& c : s.positive_classes) pos.push_back(c.get_str());
    return Json{{"points", pts}, {"square_classes", cls}, {"positive_classes", pos}};
}

ParamMap params_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "parameters must be a JSON object");
    ParamMap out;
    for (const auto& [k, v] : j.items()) out[k] = rational_from_json(v);
    return out;
}

}  // namespace qfrep
