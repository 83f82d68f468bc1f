#include "qfrep/qfrep.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qfrep/constructions.hpp"
#include "qfrep/error.hpp"
#include "qfrep/fixtures.hpp"
#include "qfrep/identities.hpp"
#include "qfrep/localsolve.hpp"
#include "qfrep/pointgen.hpp"
#include "qfrep/serialize.hpp"

struct qfr_construction {
    qfrep::Construction con;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qfr_status status_of(qfrep::ErrorKind k) {
    switch (k) {
        case qfrep::ErrorKind::InvalidArgument: return QFR_INVALID_ARGUMENT;
        case qfrep::ErrorKind::Domain: return QFR_DOMAIN;
        case qfrep::ErrorKind::Verification: return QFR_VERIFICATION;
        case qfrep::ErrorKind::Parse: return QFR_PARSE;
        case qfrep::ErrorKind::Internal: return QFR_INTERNAL;
    }
    return QFR_INTERNAL;
}

// Runs body, translating exceptions into status codes and the thread-local message.
template <class F>
qfr_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return QFR_OK;
    } catch (const qfrep::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const nlohmann::json::exception& e) {
        last_error = std::string("malformed JSON: ") + e.what();
        return QFR_PARSE;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return QFR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return QFR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return QFR_INTERNAL;
    }
}

void require_ptr(const void* p, const char* name) {
    if (!p) qfrep::invalid_argument(std::string(name) + " must not be NULL");
}

qfrep::Json parse_json(const char* text, const char* what) {
    require_ptr(text, what);
    try {
        return qfrep::Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw qfrep::Error(qfrep::ErrorKind::Parse, std::string(what) + ": " + e.what());
    }
}

}  // namespace

extern "C" {

const char* qfr_version(void) { return "1.0.0"; }

const char* qfr_last_error(void) { return last_error.c_str(); }

void qfr_string_free(char* s) { std::free(s); }

qfr_status qfr_families(char** json_out) {
    return guarded([&] {
        require_ptr(json_out, "json_out");
        using qfrep::Family;
        qfrep::Json out = qfrep::Json::array();
        for (Family f : {Family::Sec2, Family::Sec3Case1, Family::Sec3Case2, Family::Sec3Case3, Family::Sec4CaseI,
                         Family::Sec4CaseII, Family::Sec5Case2, Family::Sec5Case3, Family::Sec5Case4, Family::Sec5Case5})
            out.push_back(qfrep::Json{{"family", qfrep::family_name(f)}, {"parameters", qfrep::family_parameters(f)}});
        *json_out = dup_string(out.dump());
    });
}

qfr_status qfr_construction_create(const char* family, const char* params_json, qfr_construction** out) {
    return guarded([&] {
        require_ptr(family, "family");
        require_ptr(out, "out");
        qfrep::Family f = qfrep::parse_family(family);
        qfrep::ParamMap params = qfrep::params_from_json(parse_json(params_json, "params"));
        auto* h = new qfr_construction{qfrep::build(f, params)};
        *out = h;
    });
}

void qfr_construction_destroy(qfr_construction* con) { delete con; }

qfr_status qfr_construction_describe(const qfr_construction* con, char** json_out) {
    return guarded([&] {
        require_ptr(con, "construction");
        require_ptr(json_out, "json_out");
        *json_out = dup_string(qfrep::to_json(con->con).dump());
    });
}

qfr_status qfr_construction_psi(const qfr_construction* con, const char* U, const char* w, char** json_out) {
    return guarded([&] {
        require_ptr(con, "construction");
        require_ptr(U, "U");
        require_ptr(w, "w");
        require_ptr(json_out, "json_out");
        qfrep::Json out = qfrep::Json::array();
        for (const auto& P : qfrep::psi(con->con, qfrep::parse_rational(U), qfrep::parse_rational(w)))
            out.push_back(qfrep::to_json(P));
        *json_out = dup_string(out.dump());
    });
}

qfr_status qfr_generate_points(const qfr_construction* con, const char* generator_json, int count, int key_form_value,
                               char** ndjson_out) {
    return guarded([&] {
        require_ptr(con, "construction");
        require_ptr(ndjson_out, "ndjson_out");
        if (count <= 0) qfrep::invalid_argument("count must be positive");
        qfrep::Json g = parse_json(generator_json, "generator");
        if (!g.is_object()) throw qfrep::Error(qfrep::ErrorKind::Parse, "generator: expected an object");
        for (const auto& [key, value] : g.items())
            if (key != "base" && key != "point")
                throw qfrep::Error(qfrep::ErrorKind::Parse, "generator: unknown key \"" + key + "\"");
        if (!g.contains("base") || !g.contains("point"))
            throw qfrep::Error(qfrep::ErrorKind::Parse, "generator: expected keys \"base\" and \"point\"");
        qfrep::QuarticPoint base = qfrep::quartic_point_from_json(g["base"]);
        qfrep::QuarticPoint point = qfrep::quartic_point_from_json(g["point"]);
        const qfrep::UniPoly& aux = con->con.aux;
        if (!qfrep::on_quartic(aux, base)) qfrep::domain_error("generator: base point is not on the auxiliary curve");
        if (!qfrep::on_quartic(aux, point)) qfrep::domain_error("generator: point is not on the auxiliary curve");
        qfrep::QuarticModel model(aux, base);
        qfrep::PointStream s = qfrep::generate(con->con, model, model.to_cubic(point), count,
                                               key_form_value ? qfrep::ProjectionKey::FormValue
                                                              : qfrep::ProjectionKey::Coordinate);
        std::string out;
        for (const auto& e : s.emitted) {
            qfrep::Json line = qfrep::to_json(e.point);
            line["multiple"] = e.multiple;
            line["from_base"] = e.from_base;
            out += line.dump();
            out += '\n';
        }
        *ndjson_out = dup_string(out);
    });
}

qfr_status qfr_verify_identities(const char* only, int trials, uint64_t seed, char** json_out, int* all_ok) {
    return guarded([&] {
        require_ptr(json_out, "json_out");
        if (trials <= 0) qfrep::invalid_argument("trials must be positive");
        std::vector<std::string> ids;
        if (only && *only) {
            ids.push_back(only);
        } else {
            for (const auto& rec : qfrep::identity_catalog()) ids.push_back(rec.id);
        }
        qfrep::Json out = qfrep::Json::array();
        bool ok = true;
        for (const auto& id : ids) {
            qfrep::IdentityReport r = qfrep::verify_identity(id, trials, seed);
            ok = ok && r.ok;
            out.push_back(qfrep::to_json(r));
        }
        *json_out = dup_string(out.dump());
        if (all_ok) *all_ok = ok ? 1 : 0;
    });
}

qfr_status qfr_local_solvable(const char* coeffs_json, const char* place, long depth, char** json_out) {
    return guarded([&] {
        require_ptr(place, "place");
        require_ptr(json_out, "json_out");
        qfrep::UniPoly g = qfrep::poly_from_json(parse_json(coeffs_json, "coeffs"));
        qfrep::LocalVerdict v;
        if (std::string(place) == "real") {
            v = qfrep::really_solvable(g);
        } else {
            qfrep::Integer p;
            if (p.set_str(place, 10) != 0 || p < 2 || !qfrep::is_probable_prime(p))
                qfrep::invalid_argument(std::string("place must be a prime or \"real\": ") + place);
            v = qfrep::locally_solvable(g, p, depth);
        }
        *json_out = dup_string(qfrep::to_json(v).dump());
    });
}

qfr_status qfr_search_integer_points(long range, char** json_out) {
    return guarded([&] {
        require_ptr(json_out, "json_out");
        *json_out = dup_string(qfrep::to_json(qfrep::search_integer_points_u(range)).dump());
    });
}

qfr_status qfr_cz_demo(int count, char** json_out) {
    return guarded([&] {
        require_ptr(json_out, "json_out");
        if (count <= 0) qfrep::invalid_argument("count must be positive");
        *json_out = dup_string(qfrep::to_json(qfrep::cz_demo(count)).dump());
    });
}

qfr_status qfr_fixture_ids(char** json_out) {
    return guarded([&] {
        require_ptr(json_out, "json_out");
        *json_out = dup_string(qfrep::Json(qfrep::fixture_ids()).dump());
    });
}

qfr_status qfr_reproduce(const char* id, int count, long range, char** json_out, char** text_out, int* ok) {
    return guarded([&] {
        require_ptr(id, "id");
        require_ptr(json_out, "json_out");
        qfrep::FixtureOptions opt;
        if (count > 0) opt.count = count;
        if (range > 0) opt.range = range;
        qfrep::FixtureResult r = qfrep::reproduce(id, opt);
        std::string text = r.title + "\n";
        for (const auto& l : r.lines) text += l + "\n";
        char* j = dup_string(r.data.dump());
        if (text_out) {
            try {
                *text_out = dup_string(text);
            } catch (...) {
                std::free(j);
                throw;
            }
        }
        *json_out = j;
        if (ok) *ok = r.ok() ? 1 : 0;
    });
}

}  // extern "C"
