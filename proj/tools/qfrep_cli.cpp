// qfrep command-line front end. Talks to the library only through the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "qfrep/qfrep.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure, degenerate input, internal error
constexpr int kExitUsage = 2;    // usage error, malformed JSON

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { qfr_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

struct ConstructionHandle {
    qfr_construction* h = nullptr;
    ~ConstructionHandle() { qfr_construction_destroy(h); }
};

int exit_code_for(qfr_status st) {
    switch (st) {
        case QFR_OK: return kExitOk;
        case QFR_INVALID_ARGUMENT:
        case QFR_PARSE: return kExitUsage;
        default: return kExitFailure;
    }
}

// Reports a library failure on stderr and returns the matching exit code.
int fail(qfr_status st, const std::string& context) {
    std::cerr << "error: " << context << ": " << qfr_last_error() << "\n";
    return exit_code_for(st);
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// ---------------------------------------------------------------- subcommands

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    int trials = 20;
    int count = 0;
    std::string prime;
    long depth = 0;
    long range = 100000;
    std::string params = "{}";
    std::string only;
    std::string family;
    std::string generator;
    std::string coeffs;
    std::string id;
    std::string key = "coordinate";
    bool real = false;
};

int run_reproduce(const Options& o) {
    std::vector<std::string> ids;
    if (o.id == "all") {
        OwnedString list;
        if (qfr_status st = qfr_fixture_ids(&list.s); st != QFR_OK) return fail(st, "fixture list");
        for (const auto& id : Json::parse(list.str())) ids.push_back(id.get<std::string>());
    } else {
        ids.push_back(o.id);
    }
    bool all_ok = true;
    Json results = Json::array();
    for (const auto& id : ids) {
        OwnedString json, text;
        int ok = 0;
        qfr_status st = qfr_reproduce(id.c_str(), o.count, o.range, &json.s, &text.s, &ok);
        if (st != QFR_OK) return fail(st, "reproduce " + id);
        all_ok = all_ok && ok;
        if (o.json) {
            results.push_back(Json::parse(json.str()));
        } else {
            std::cout << "== " << id << ": " << text.str() << (ok ? "PASS" : "FAIL") << "\n\n";
        }
    }
    if (o.json) std::cout << (ids.size() == 1 ? results[0] : results).dump(2) << "\n";
    return all_ok ? kExitOk : kExitFailure;
}

int run_points(const Options& o) {
    ConstructionHandle con;
    if (qfr_status st = qfr_construction_create(o.family.c_str(), o.params.c_str(), &con.h); st != QFR_OK)
        return fail(st, "construction");
    if (o.key != "coordinate" && o.key != "form") {
        std::cerr << "error: --key must be \"coordinate\" or \"form\"\n";
        return kExitUsage;
    }
    OwnedString out;
    int count = o.count > 0 ? o.count : 10;
    if (qfr_status st = qfr_generate_points(con.h, o.generator.c_str(), count, o.key == "form", &out.s); st != QFR_OK)
        return fail(st, "points");
    if (o.json) {
        std::cout << out.str();
        return kExitOk;
    }
    OwnedString desc;
    if (qfr_status st = qfr_construction_describe(con.h, &desc.s); st != QFR_OK) return fail(st, "describe");
    Json d = Json::parse(desc.str());
    std::string coord = d["projection"].get<std::string>();
    std::cout << "family " << d["family"].get<std::string>() << ", auxiliary curve w^2 = ";
    const auto& aux = d["aux"];
    bool first = true;
    for (std::size_t i = aux.size(); i-- > 0;) {
        std::string c = aux[i].get<std::string>();
        if (c == "0") continue;
        std::cout << (first ? "" : " + ") << "(" << c << ")" << (i ? "*U^" + std::to_string(i) : "");
        first = false;
    }
    std::cout << "\n" << pad("n", 8) << pad("p", 28) << pad("q", 28) << coord << "\n";
    std::size_t start = 0;
    const std::string text = out.str();
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        Json pt = Json::parse(text.substr(start, end - start));
        start = end + 1;
        std::string n = pt["from_base"].get<bool>() ? "base" : std::to_string(pt["multiple"].get<long>());
        std::cout << pad(n, 8) << pad(pt["p"].get<std::string>(), 28) << pad(pt["q"].get<std::string>(), 28)
                  << pt["coord"].get<std::string>() << "\n";
    }
    return kExitOk;
}

int run_identities(const Options& o) {
    OwnedString out;
    int all_ok = 0;
    qfr_status st = qfr_verify_identities(o.only.empty() ? nullptr : o.only.c_str(), o.trials, o.seed, &out.s, &all_ok);
    if (st != QFR_OK) return fail(st, "identities");
    Json reports = Json::parse(out.str());
    if (o.json) {
        std::cout << Json{{"seed", o.seed}, {"trials", o.trials}, {"ok", all_ok != 0}, {"identities", reports}}.dump(2)
                  << "\n";
    } else {
        std::cout << "seed " << o.seed << ", " << o.trials << " trials per identity\n";
        for (const auto& r : reports) {
            std::string status = r["ok"].get<bool>() ? "PASS" : "FAIL";
            std::string delta = r["convention_delta"].is_null()
                                    ? ""
                                    : "  (constant factor " + r["convention_delta"].get<std::string>() + ")";
            std::cout << pad(r["id"].get<std::string>(), 5) << status << "  " << r["passed"].get<int>() << "/"
                      << r["trials"].get<int>() << delta << "  " << r["statement"].get<std::string>() << "\n";
            if (r.contains("note")) std::cout << "     note: " << r["note"].get<std::string>() << "\n";
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

int run_localsolve(const Options& o) {
    if (o.real == !o.prime.empty()) {
        std::cerr << "error: give exactly one of --prime p and --real\n";
        return kExitUsage;
    }
    OwnedString out;
    std::string place = o.real ? "real" : o.prime;
    qfr_status st = qfr_local_solvable(o.coeffs.c_str(), place.c_str(), o.depth, &out.s);
    if (st != QFR_OK) return fail(st, "localsolve");
    Json v = Json::parse(out.str());
    if (o.json) {
        std::cout << v.dump(2) << "\n";
        return kExitOk;
    }
    std::string where = o.real ? "over R" : "at p = " + o.prime;
    std::cout << (v["solvable"].get<bool>() ? "solvable " : "unsolvable ") << where << "\n";
    if (!v["witness"].is_null()) {
        const auto& w = v["witness"];
        std::cout << "witness: U = " << w["U"].get<std::string>();
        if (w.contains("precision"))
            std::cout << " (mod p^" << w["precision"].get<long>() << (w["reciprocal"].get<bool>() ? ", as 1/U" : "")
                      << ")";
        std::cout << "; " << w["reason"].get<std::string>() << "\n";
    }
    if (v.contains("depth_cap"))
        std::cout << "depth reached " << v["depth_reached"].get<long>() << " of cap " << v["depth_cap"].get<long>()
                  << ", discs refuted " << v["discs_refuted"].get<long>() << "\n";
    return kExitOk;
}

int run_search(const Options& o) {
    OwnedString out;
    if (qfr_status st = qfr_search_integer_points(o.range, &out.s); st != QFR_OK)
        return fail(st, "search-integer-points");
    Json s = Json::parse(out.str());
    if (o.json) {
        std::cout << Json{{"range", o.range}, {"result", s}}.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "integer points on v^2 = u(u+2)(u+6), |u| <= " << o.range << "\n" << pad("u", 10) << "v\n";
    for (const auto& p : s["points"]) std::cout << pad(p["u"].get<std::string>(), 10) << p["v"].get<std::string>() << "\n";
    std::cout << "squarefree parts of 2u over u > 0:";
    for (const auto& c : s["positive_classes"]) std::cout << " " << c.get<std::string>();
    std::cout << "\n";
    return kExitOk;
}

int run_cz(const Options& o) {
    OwnedString out;
    int count = o.count > 0 ? o.count : 4;
    if (qfr_status st = qfr_cz_demo(count, &out.s); st != QFR_OK) return fail(st, "cz");
    Json r = Json::parse(out.str());
    bool ok = r["generator_on_curve"].get<bool>() && r["generator_infinite_order"].get<bool>() &&
              r["sextic_discriminant"].get<std::string>() != "0";
    if (o.json) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "Y^2 = (X^2+1)(X^2+11), generator (1/2, 15/4)\n";
        for (const auto& row : r["multiples"])
            std::cout << "[" << row["k"].get<long>() << "]G  X = " << row["X"].get<std::string>()
                      << "  Y = " << row["Y"].get<std::string>() << "\n";
        std::cout << "sextic discriminant " << r["sextic_discriminant"].get<std::string>() << "\n";
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational points on (ap^2+bq^2)^2 = f(X) and Y^2 = f(ap^2+bq^2)"};
    app.require_subcommand(1);
    Options o;

    auto* rep = app.add_subcommand("reproduce", "Run a worked instance end-to-end (or \"all\")");
    rep->add_option("id", o.id, "ex2.4 ex2.5 ex3.2 ex3.3 ex3.4 ex3.5 ex4.3 ex5.2 rem3.1 rem5.3 cz all")->required();
    rep->add_option("--count", o.count, "Points to stream (fixture default when omitted)");
    rep->add_option("--range", o.range, "Integer-point search range")->check(CLI::PositiveNumber);
    rep->add_flag("--json", o.json, "JSON output");

    auto* pts = app.add_subcommand("points", "Stream verified surface points of a construction");
    pts->add_option("--family", o.family, "Construction family tag")->required();
    pts->add_option("--params", o.params, "JSON object of parameters (rational strings)")->required();
    pts->add_option("--generator", o.generator,
                    "JSON {\"base\": P, \"point\": P}, P = {\"U\",\"w\"} | \"inf+\" | \"inf-\" on the auxiliary curve")
        ->required();
    pts->add_option("--count", o.count, "Number of points (default 10)");
    pts->add_option("--key", o.key, "Distinctness key: coordinate | form");
    pts->add_flag("--json", o.json, "Newline-delimited JSON output");

    auto* ids = app.add_subcommand("identities", "Check the identity catalogue by random specialization");
    ids->add_option("--only", o.only, "Single identity id (I1..I13)");
    ids->add_option("--trials", o.trials, "Trials per identity")->check(CLI::PositiveNumber);
    ids->add_option("--seed", o.seed, "Random seed");
    ids->add_flag("--json", o.json, "JSON output");

    auto* loc = app.add_subcommand("localsolve", "Local solvability of w^2 = g(U)");
    loc->add_option("--coeffs", o.coeffs, "JSON array of coefficients, constant term first")->required();
    loc->add_option("--prime", o.prime, "Prime p");
    loc->add_flag("--real", o.real, "Decide solvability over the reals");
    loc->add_option("--depth", o.depth, "Disc depth cap (default 2 v_p(Disc) + 4)")->check(CLI::PositiveNumber);
    loc->add_flag("--json", o.json, "JSON output");

    auto* srch = app.add_subcommand("search-integer-points", "Integer points of v^2 = u(u+2)(u+6)");
    srch->add_option("--range", o.range, "Search |u| <= range")->check(CLI::PositiveNumber);
    srch->add_flag("--json", o.json, "JSON output");

    auto* cz = app.add_subcommand("cz", "Multiples of (1/2, 15/4) on Y^2 = (X^2+1)(X^2+11)");
    cz->add_option("--count", o.count, "Number of multiples (default 4)");
    cz->add_flag("--json", o.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rep->parsed()) return run_reproduce(o);
        if (pts->parsed()) return run_points(o);
        if (ids->parsed()) return run_identities(o);
        if (loc->parsed()) return run_localsolve(o);
        if (srch->parsed()) return run_search(o);
        if (cz->parsed()) return run_cz(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
