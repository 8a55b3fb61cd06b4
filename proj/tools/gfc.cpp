// gfc: command-line front end for the weight-graded Gel'fand-Fuks complexes.
//
// Exit codes: 0 ok, 2 usage, 3 budget exceeded, 4 verification failure.

#include "gfc/characteristic.hpp"
#include "gfc/complex.hpp"
#include "gfc/errors.hpp"
#include "gfc/parallel.hpp"
#include "gfc/genfun.hpp"
#include "gfc/serialize.hpp"
#include "gfc/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gfc;

namespace {

constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr int kFailed = 4;

struct Common {
    std::string format = "human";
    std::size_t budget_dim = 200000;
};

struct SliceArgs {
    std::string algebra = "ham0";
    int weight = 0;
    std::optional<int> max_degree;
};

SliceOptions slice_options(const Common& c, const SliceArgs& s) {
    SliceOptions o;
    o.max_degree = s.max_degree;
    o.budget_dim = c.budget_dim;
    return o;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_dims(const Common& c, const SliceArgs& s, bool show_profiles) {
    const auto variant = parse_variant(s.algebra);
    auto profiles = enumerate_profiles(variant, s.weight);
    if (s.max_degree) std::erase_if(profiles, [&](const IrrepProfile& p) { return p.degree() > *s.max_degree; });
    std::vector<std::size_t> dims(profiles.size());
    parallel_for(profiles.size(), [&](std::size_t i) { dims[i] = invariant_dim(profiles[i], c.budget_dim); });

    std::map<int, std::size_t> by_degree;
    std::map<int, std::vector<std::pair<std::string, std::size_t>>> generators;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        by_degree[profiles[i].degree()] += dims[i];
        if (dims[i] > 0) generators[profiles[i].degree()].emplace_back(profiles[i].symbol(), dims[i]);
    }

    if (c.format == "json") {
        Json degrees = Json::array();
        for (const auto& [d, n] : by_degree) {
            if (n == 0) continue;
            Json ps = Json::array();
            for (const auto& [sym, m] : generators[d]) ps.push_back(Json{{"slots", IrrepProfile::parse(sym).slots()}, {"dim", m}});
            degrees.push_back(Json{{"degree", d}, {"profiles", std::move(ps)}, {"dim", n}});
        }
        print_json(Json{{"variant", to_string(variant)}, {"weight", s.weight}, {"degrees", std::move(degrees)}});
    } else if (c.format == "csv") {
        std::cout << "degree,profile,dim\n";
        for (const auto& [d, gens] : generators)
            for (const auto& [sym, m] : gens) std::cout << d << "," << sym << "," << m << "\n";
    } else {
        std::cout << degree_map_text(by_degree) << "\n";
        if (show_profiles)
            for (const auto& [d, gens] : generators) {
                std::cout << "C^" << d << ":";
                for (const auto& [sym, m] : gens) std::cout << " (" << sym << ")" << (m > 1 ? "_" + std::to_string(m) : "");
                std::cout << "\n";
            }
    }
    return 0;
}

int cmd_cohomology(const Common& c, const SliceArgs& s) {
    const auto slice = build_slice(parse_variant(s.algebra), s.weight, slice_options(c, s));
    if (c.format == "json") {
        print_json(cohomology_json(slice));
    } else if (c.format == "csv") {
        std::cout << "degree,dim\n";
        for (const auto& [d, n] : cohomology_dims(slice)) std::cout << d << "," << n << "\n";
    } else {
        std::cout << degree_map_text(cohomology_dims(slice)) << "\n";
    }
    return 0;
}

int cmd_matrix(const Common& c, const SliceArgs& s, int degree, const std::string& output) {
    const auto slice = build_slice(parse_variant(s.algebra), s.weight, slice_options(c, s));
    if (degree < 0 || static_cast<std::size_t>(degree) >= slice.coboundary_count())
        throw std::invalid_argument("no coboundary from degree " + std::to_string(degree) + " in this slice");
    const auto& m = slice.coboundary(degree);
    std::string text;
    if (c.format == "json") {
        Json j{{"variant", to_string(slice.variant())}, {"weight", slice.weight()}, {"from_degree", degree}};
        j.update(matrix_json(m));
        text = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        std::ostringstream os;
        os << "row,col,value\n";
        for (const auto& [k, v] : m.entries()) os << k.first << "," << k.second << "," << to_fraction_string(v) << "\n";
        text = os.str();
    } else {
        text = to_matrix_text(m);
    }
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::invalid_argument("cannot write " + output);
        out << text;
    }
    return 0;
}

int cmd_factorize(const Common& c, const std::string& experiment) {
    if (!experiment.empty()) {
        if (experiment != "metoki") throw std::invalid_argument("unknown experiment: " + experiment);
        // Leaf class of weight 16 against the weight-14 class of the full algebra.
        SliceOptions o;
        o.budget_dim = c.budget_dim;
        const auto reports = verify_iso_in_cohomology(16, o);
        Json rows = Json::array();
        bool ok = !reports.empty();
        for (const auto& r : reports) {
            rows.push_back(Json{{"degree", r.degree}, {"source_dim", r.source_dim}, {"target_dim", r.target_dim},
                                {"image_rank", r.image_rank}, {"images_closed", r.images_closed}, {"iso", r.iso}});
            ok = ok && r.iso;
        }
        if (c.format == "json") print_json(Json{{"source_weight", 16}, {"classes", std::move(rows)}});
        else
            for (const auto& r : reports)
                std::cout << "H^" << r.degree << "(ham0)_16 -> H^" << r.degree + 2 << "(ham)_14: " << r.source_dim << " -> "
                          << r.target_dim << " rank " << r.image_rank << (r.iso ? " iso" : " not iso") << "\n";
        return ok ? 0 : kFailed;
    }

    SliceOptions o;
    o.budget_dim = c.budget_dim;
    const auto report = factorize(o);
    if (c.format == "json") {
        print_json(factorization_json(report));
    } else {
        const Json j = factorization_json(report);
        const auto& checks = j["checks"];
        if (c.format == "csv") {
            std::cout << "check,value\n";
            for (const auto& [k, v] : checks.items()) std::cout << k << "," << (v.get<bool>() ? "true" : "false") << "\n";
        } else {
            const auto& e = report.eta;
            std::cout << "eta: degree " << e.eta.cochain.degree << ", weight " << e.eta.cochain.weight << ", support";
            for (const auto& p : e.support_profiles) std::cout << " (" << p << ")";
            std::cout << "\n";
            if (e.obstruction) std::cout << "obstruction: " << *e.obstruction << "\n";
            std::cout << "eta coefficients:";
            for (const auto& q : e.eta.cochain.coordinates) std::cout << " " << q.get_str();
            std::cout << "\nGKF = eta ^ omega: degree " << e.gkf.cochain.degree << ", weight " << e.gkf.cochain.weight << "\n";
            for (const auto& [k, v] : checks.items()) std::cout << k << ": " << (v.get<bool>() ? "true" : "false") << "\n";
        }
    }
    return report.all_passed() ? 0 : kFailed;
}

void print_series(const Common& c, const LaurentSeries& s, Json extra = Json::object()) {
    if (c.format == "json") {
        Json j = series_json(s);
        j.update(extra);
        print_json(j);
    } else if (c.format == "csv") {
        std::cout << "exp,value\n";
        for (const auto& [e, q] : s.coeffs) std::cout << e << "," << to_fraction_string(q) << "\n";
    } else {
        std::cout << s.to_string() << "\n";
    }
}

int cmd_euler(const Common& c, int n, int tmax, const std::string& method, bool full) {
    if (n < 1) throw std::invalid_argument("--n must be positive");
    const auto variant = full ? AlgebraVariant::Ham : AlgebraVariant::Ham0;
    auto product = [&] { return full ? perchik_full_series(n, tmax) : perchik_series(n, tmax); };
    if (method == "complex" || method == "both") {
        if (n != 1) throw std::invalid_argument("--method " + method + " needs --n 1");
    }
    if (method == "complex") {
        print_series(c, complex_euler_series(variant, tmax, c.budget_dim));
        return 0;
    }
    if (method == "both") {
        const auto p = product();
        const auto x = complex_euler_series(variant, tmax, c.budget_dim);
        const bool match = agree(p, x);
        if (c.format == "human") {
            std::cout << p.to_string() << "\n";
            if (!match) std::cout << "complex: " << x.to_string() << "\n";
            std::cout << "match=" << (match ? "true" : "false") << "\n";
        } else {
            print_series(c, p, Json{{"complex", series_json(x)}, {"match", match}});
        }
        return match ? 0 : kFailed;
    }
    const auto p = product();
    if (n == 1 || full) {
        print_series(c, p);
        return 0;
    }
    const auto report = stabilization_report(n, tmax);
    if (c.format == "json") {
        print_series(c, p, Json{{"stabilization", stabilization_json(report)}});
        return 0;
    }
    if (c.format == "csv") {
        std::cout << "exp";
        for (int k = 1; k <= n; ++k) std::cout << ",n=" << k;
        std::cout << ",stabilized,stable_target,algebra_target\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    for (const auto& row : report.rows) {
        if (c.format == "csv") {
            std::cout << row.exponent;
            for (const auto& v : row.by_n) std::cout << "," << (v ? v->get_str() : "");
            std::cout << "," << (row.stabilized ? "true" : "false") << "," << (row.stable_target ? row.stable_target->get_str() : "")
                      << "," << (row.algebra_target ? row.algebra_target->get_str() : "") << "\n";
            continue;
        }
        std::cout << "t^" << row.exponent << ":";
        for (std::size_t k = 0; k < row.by_n.size(); ++k)
            std::cout << " n=" << k + 1 << " " << (row.by_n[k] ? row.by_n[k]->get_str() : "-");
        std::cout << (row.stabilized ? " stabilized" : " not-stabilized");
        if (row.stable_target) std::cout << " c=" << row.stable_target->get_str();
        if (row.algebra_target) std::cout << " A=" << row.algebra_target->get_str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const Common& c, const std::string& suite, bool timing) {
    const auto reports = run_suite(suite);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass;
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) {
            Json j{{"name", r.name}, {"expected", r.expected}, {"source", r.source}, {"computed", r.computed}, {"pass", r.pass}};
            if (timing) j["elapsed_ms"] = r.elapsed_ms;
            arr.push_back(std::move(j));
        }
        print_json(Json{{"suite", suite}, {"passed", ok}, {"checks", std::move(arr)}});
    } else if (c.format == "csv") {
        std::cout << "name,pass,expected,computed,source" << (timing ? ",elapsed_ms" : "") << "\n";
        for (const auto& r : reports) {
            std::cout << '"' << r.name << "\"," << (r.pass ? "true" : "false") << ",\"" << r.expected << "\",\"" << r.computed
                      << "\"," << r.source;
            if (timing) std::cout << "," << r.elapsed_ms;
            std::cout << "\n";
        }
    } else {
        std::size_t passed = 0;
        for (const auto& r : reports) {
            passed += r.pass;
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.computed;
            if (!r.pass) std::cout << " (expected " << r.expected << ")";
            std::cout << " [" << r.source << "]";
            if (timing) std::cout << " " << static_cast<long long>(r.elapsed_ms) << "ms";
            std::cout << "\n";
        }
        std::cout << passed << "/" << reports.size() << " checks passed\n";
    }
    return ok ? 0 : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight-graded Gel'fand-Fuks cohomology of formal Hamiltonian vector fields on the plane"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--budget-dim", common.budget_dim, "Largest wedge-monomial space per profile")->check(CLI::PositiveNumber);

    auto add_slice = [](CLI::App* sub, SliceArgs& s) {
        sub->add_option("--algebra", s.algebra, "ham or ham0")->check(CLI::IsMember({"ham", "ham0"}));
        sub->add_option("--weight", s.weight, "Weight w")->required();
        sub->add_option("--max-degree", s.max_degree, "Highest cochain degree");
    };

    SliceArgs dims_args, coh_args, mat_args;
    bool show_profiles = false;
    auto* dims = app.add_subcommand("dims", "Per-degree cochain dimensions");
    add_slice(dims, dims_args);
    dims->add_flag("--profiles", show_profiles, "Also list generator profiles per degree");

    auto* coh = app.add_subcommand("cohomology", "Per-degree cohomology dimensions");
    add_slice(coh, coh_args);

    int mat_degree = 0;
    std::string mat_output;
    auto* mat = app.add_subcommand("matrix", "Export a coboundary matrix");
    add_slice(mat, mat_args);
    mat->add_option("--degree", mat_degree, "Source degree d of delta_d")->required();
    mat->add_option("--output", mat_output, "Write to this file instead of stdout");

    std::string experiment;
    auto* fac = app.add_subcommand("factorize", "Certify GKF = eta ^ omega and p1 = gamma1 ^ omega");
    fac->add_option("--experiment", experiment, "Opt-in long job: metoki (weight 16 leaf class)");

    int n = 1, tmax = 10;
    std::string method = "product";
    bool full = false;
    auto* eul = app.add_subcommand("euler", "Euler-characteristic generating functions");
    eul->add_option("--n", n, "Half dimension n");
    eul->add_option("--tmax", tmax, "Truncation order in t");
    eul->add_option("--method", method, "product, complex or both")->check(CLI::IsMember({"product", "complex", "both"}));
    eul->add_flag("--full", full, "Include the constant-term factor (series of ham instead of ham0)");

    std::string suite = "all";
    bool timing = false;
    auto* ver = app.add_subcommand("verify", "Run a check suite");
    ver->add_option("--suite", suite, "tables, gkf, main-theorem, genfun or all")->check(CLI::IsMember(suite_names()));
    ver->add_flag("--timing", timing, "Report elapsed time per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (dims->parsed()) return cmd_dims(common, dims_args, show_profiles);
        if (coh->parsed()) return cmd_cohomology(common, coh_args);
        if (mat->parsed()) return cmd_matrix(common, mat_args, mat_degree, mat_output);
        if (fac->parsed()) return cmd_factorize(common, experiment);
        if (eul->parsed()) return cmd_euler(common, n, tmax, method, full);
        if (ver->parsed()) return cmd_verify(common, suite, timing);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const InconsistencyError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
