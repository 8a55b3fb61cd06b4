#include "gfc/verify.hpp"

#include "gfc/characteristic.hpp"
#include "gfc/complex.hpp"
#include "gfc/genfun.hpp"
#include "gfc/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace gfc {
namespace {

std::string or_token(const std::string& text, const char* empty_token) { return text.empty() ? empty_token : text; }

class Runner {
public:
    void check(std::string name, std::string expected, std::string source, const std::function<std::string()>& compute) {
        VerifyReport r;
        r.name = std::move(name);
        r.expected = std::move(expected);
        r.source = std::move(source);
        const auto start = std::chrono::steady_clock::now();
        try {
            r.computed = compute();
        } catch (const std::exception& e) {
            r.computed = std::string("error: ") + e.what();
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r.pass = r.computed == r.expected;
        reports.push_back(std::move(r));
    }

    const WeightSlice& slice(AlgebraVariant v, int w) {
        auto key = std::make_pair(v, w);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, build_slice(v, w)).first;
        return it->second;
    }

    const FactorizationReport& factorization() {
        if (!factorization_) factorization_ = factorize();
        return *factorization_;
    }

    std::vector<VerifyReport> reports;

private:
    std::map<std::pair<AlgebraVariant, int>, WeightSlice> cache_;
    std::optional<FactorizationReport> factorization_;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string dims_text(Runner& run, AlgebraVariant v, int w) {
    return or_token(degree_map_text(slice_degree_dims(run.slice(v, w))), "all zero");
}

std::string cohomology_text(Runner& run, AlgebraVariant v, int w) {
    return or_token(degree_map_text(cohomology_dims(run.slice(v, w))), "acyclic");
}

void tables_suite(Runner& run) {
    const auto ham0 = AlgebraVariant::Ham0;
    const std::vector<std::tuple<int, std::string, std::string>> table1{
        {2, "2:1", "1"}, {4, "3:1 4:1", "0"}, {6, "2:1 3:1", "0"}, {8, "3:4 4:5 5:1", "0"}};
    for (const auto& [w, dims, chi] : table1) {
        run.check("table1 ham0 w=" + std::to_string(w) + " dims", dims, "reference", [&, w = w] { return dims_text(run, ham0, w); });
        run.check("table1 ham0 w=" + std::to_string(w) + " chi", chi, "reference",
                  [&, w = w] { return std::to_string(euler_characteristic(run.slice(ham0, w))); });
    }

    const std::vector<std::pair<int, std::string>> table2{
        {3, "(3 4 7) (3 5 6) (4^2 6) (4 5^2)"}, {4, "(3^2 4 6) (3^2 5^2)_2 (3 4^2 5)_2"}, {5, "(3^3 4 5)"}};
    for (const auto& [d, gens] : table2)
        run.check("table2 ham0 w=8 C^" + std::to_string(d) + " generators", gens, "reference",
                  [&, d = d] { return generator_list(run.slice(ham0, 8), d); });
    run.check("table2 ham0 w=8 acyclic", "acyclic", "reference", [&] { return cohomology_text(run, ham0, 8); });

    run.check("table3 ham0 w=10 dims", "2:1 3:3 4:9 5:12 6:4", "reference", [&] { return dims_text(run, ham0, 10); });
    run.check("table3 ham0 w=10 chi", "-1", "reference",
              [&] { return std::to_string(euler_characteristic(run.slice(ham0, 10))); });
    run.check("table3 ham w=8 dims", "3:5 4:13 5:17 6:18 7:14 8:4", "reference",
              [&] { return dims_text(run, AlgebraVariant::Ham, 8); });
    run.check("table3 ham w=8 chi", "-1", "reference",
              [&] { return std::to_string(euler_characteristic(run.slice(AlgebraVariant::Ham, 8))); });

    const std::vector<std::pair<int, std::string>> table4{
        {2, "(7^2)"},
        {3, "(3 5 8) (3 6 7) (4 5 7)"},
        {4, "(3^2 4 8) (3^2 5 7) (3 4^2 7) (3 4 5 6)_4 (3 5^3) (4^3 6)"},
        {5, "(3^3 4 7) (3^3 5 6) (3^2 4^2 6)_3 (3^2 4 5^2)_4 (3 4^3 5)_2 (4^5)"},
        {6, "(3^4 5^2) (3^3 4^2 5)_2 (3^2 4^4)"}};
    for (const auto& [d, gens] : table4)
        run.check("table4 ham0 w=10 C^" + std::to_string(d) + " generators", gens, "reference",
                  [&, d = d] { return generator_list(run.slice(ham0, 10), d); });

    for (int w : {3, 5})
        run.check("odd weight ham0 w=" + std::to_string(w) + " dims", "all zero", "reference",
                  [&, w] { return dims_text(run, ham0, w); });
    run.check("odd weight ham w=3 dims", "all zero", "reference", [&] { return dims_text(run, AlgebraVariant::Ham, 3); });
}

std::string rank_text(const WeightSlice& s, int d) { return std::to_string(rank(s.coboundary(d))); }

std::string composite_text(const WeightSlice& s) {
    for (std::size_t d = 0; d + 1 < s.coboundary_count(); ++d) {
        const auto sq = s.coboundary(static_cast<int>(d + 1)) * s.coboundary(static_cast<int>(d));
        if (!sq.is_zero()) return "nonzero at d=" + std::to_string(d);
    }
    return "zero";
}

void gkf_suite(Runner& run) {
    const auto ham0 = AlgebraVariant::Ham0;
    const auto ham = AlgebraVariant::Ham;
    run.check("ham0 w=10 rank delta_4", "7", "derived", [&] { return rank_text(run.slice(ham0, 10), 4); });
    run.check("ham0 w=10 rank delta_5", "4", "derived", [&] { return rank_text(run.slice(ham0, 10), 5); });
    run.check("ham0 w=10 kernel delta_5", "8", "derived",
              [&] { return std::to_string(kernel_basis(run.slice(ham0, 10).coboundary(5)).size()); });
    run.check("ham0 w=10 delta_5 delta_4", "zero", "reference", [&] {
        const auto& s = run.slice(ham0, 10);
        return (s.coboundary(5) * s.coboundary(4)).is_zero() ? std::string("zero") : std::string("nonzero");
    });
    run.check("ham0 w=10 coboundary expansion", "true", "trivial", [&] {
        const auto& s = run.slice(ham0, 10);
        bool ok = true;
        for (std::size_t d = 0; d < s.coboundary_count(); ++d) ok = ok && verify_coboundary_expansion(s, static_cast<int>(d));
        return bool_text(ok);
    });
    run.check("ham w=8 rank delta_6", "9", "derived", [&] { return rank_text(run.slice(ham, 8), 6); });
    run.check("ham w=8 rank delta_7", "4", "derived", [&] { return rank_text(run.slice(ham, 8), 7); });
    run.check("ham w=8 delta squared", "zero", "trivial", [&] { return composite_text(run.slice(ham, 8)); });
    run.check("ham w=8 cohomology", "7:1", "reference", [&] { return cohomology_text(run, ham, 8); });

    run.check("wedge omega chain map", "true", "reference", [&] { return bool_text(run.factorization().chain_map); });
    run.check("wedge omega injective", "true", "reference", [&] { return bool_text(run.factorization().injective); });
    run.check("eta ^ omega closed", "true", "trivial", [&] { return bool_text(run.factorization().eta.closed); });
    run.check("eta ^ omega non-exact", "true", "reference", [&] { return bool_text(run.factorization().eta.non_exact); });
    run.check("eta on preferred profiles", "true", "reference", [&] {
        const auto& e = run.factorization().eta;
        const auto preferred = eta_preferred_profiles();
        bool inside = e.support_restricted;
        for (const auto& s : e.support_profiles)
            inside = inside && std::find(preferred.begin(), preferred.end(), IrrepProfile::parse(s)) != preferred.end();
        return bool_text(inside);
    });
    run.check("gamma1 ^ omega spans p1", "true", "reference", [&] { return bool_text(run.factorization().p1_line); });
}

void main_theorem_suite(Runner& run) {
    const auto ham0 = AlgebraVariant::Ham0;
    const auto ham = AlgebraVariant::Ham;
    const std::vector<std::pair<int, std::string>> leaf{{0, "0:1"}, {2, "2:1"}, {4, "acyclic"},
                                                        {6, "acyclic"}, {8, "acyclic"}, {10, "5:1"}};
    for (const auto& [w, h] : leaf)
        run.check("ham0 w=" + std::to_string(w) + " cohomology", h, "reference", [&, w = w] { return cohomology_text(run, ham0, w); });

    const std::vector<std::pair<int, std::string>> full{{-2, "2:1"}, {0, "0:1 4:1"}, {2, "acyclic"},
                                                        {4, "acyclic"}, {6, "acyclic"}, {8, "7:1"}};
    for (const auto& [w, h] : full)
        run.check("ham w=" + std::to_string(w) + " cohomology", h, "reference", [&, w = w] { return cohomology_text(run, ham, w); });
    for (int w : {1, 3, 5, 7})
        run.check("ham w=" + std::to_string(w) + " dims", "all zero", "reference", [&, w] { return dims_text(run, ham, w); });

    for (int w : {0, 2, 10}) {
        run.check("wedge omega iso from ham0 w=" + std::to_string(w), "iso", "reference", [w] {
            const auto reports = verify_iso_in_cohomology(w);
            if (reports.size() != 1) return "classes: " + std::to_string(reports.size());
            const auto& r = reports.front();
            return r.iso ? std::string("iso")
                         : "H^" + std::to_string(r.degree) + " " + std::to_string(r.source_dim) + " -> " +
                               std::to_string(r.target_dim) + " rank " + std::to_string(r.image_rank);
        });
    }

    run.check("omega^2: C^4 at w=-4", "0", "reference",
              [&] { return std::to_string(run.slice(ham, -4).dim(4)); });
    run.check("omega p1: H^6 at w=-2", "0", "reference", [&] {
        auto h = cohomology_dims(run.slice(ham, -2));
        return std::to_string(h.count(6) ? h[6] : 0);
    });
    run.check("p1^2: H^8 at w=0", "0", "reference", [&] {
        auto h = cohomology_dims(run.slice(ham, 0));
        return std::to_string(h.count(8) ? h[8] : 0);
    });
}

void genfun_suite(Runner& run) {
    run.check("perchik n=1 to t^26", "1 + t^2 - t^10 + t^12 - t^14 - t^16 + t^18 - 3t^24 + 2t^26", "reference",
              [] { return perchik_series(1, 26).to_string(); });
    run.check("perchik full n=1 to t^32", "t^-2 + 2 - t^8 - t^14 - t^22 - t^28 + t^30 - t^32", "reference",
              [] { return perchik_full_series(1, 32).to_string(); });
    run.check("perchik n=1 to t^0", "1", "trivial", [] { return perchik_series(1, 0).to_string(); });
    run.check("complex euler ham0 to t^10", "1 + t^2 - t^10", "reference",
              [] { return complex_euler_series(AlgebraVariant::Ham0, 10).to_string(); });
    run.check("product = complex (ham0) to t^10", "true", "reference",
              [] { return bool_text(agree(perchik_series(1, 10), complex_euler_series(AlgebraVariant::Ham0, 10))); });
    run.check("complex euler ham to t^8", "t^-2 + 2 - t^8", "derived",
              [] { return complex_euler_series(AlgebraVariant::Ham, 8).to_string(); });
    run.check("full product = complex (ham) to t^8", "true", "derived",
              [] { return bool_text(agree(perchik_full_series(1, 8), complex_euler_series(AlgebraVariant::Ham, 8))); });
    run.check("perchik n=2 constant term", "1", "trivial", [] { return perchik_series(2, 0).to_string(); });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tables", "gkf", "main-theorem", "genfun", "all"};
    return names;
}

std::vector<VerifyReport> run_suite(const std::string& suite) {
    Runner run;
    const bool all = suite == "all";
    if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite: " + suite);
    if (all || suite == "tables") tables_suite(run);
    if (all || suite == "gkf") gkf_suite(run);
    if (all || suite == "main-theorem") main_theorem_suite(run);
    if (all || suite == "genfun") genfun_suite(run);
    return std::move(run.reports);
}

}  // namespace gfc
