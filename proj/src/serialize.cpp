#include "gfc/serialize.hpp"

namespace gfc {

std::string degree_map_text(const std::map<int, std::size_t>& dims) {
    std::string s;
    for (const auto& [d, n] : dims) {
        if (n == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(d) + ":" + std::to_string(n);
    }
    return s;
}

std::map<int, std::size_t> slice_degree_dims(const WeightSlice& slice) {
    std::map<int, std::size_t> out;
    for (int d = 0; d <= slice.max_degree(); ++d) out[d] = slice.dim(d);
    return out;
}

std::string generator_list(const WeightSlice& slice, int degree) {
    std::string s;
    if (degree < 0 || degree > slice.max_degree()) return s;
    for (const auto& basis : slice.block(degree).profiles) {
        if (basis.dim() == 0) continue;
        if (!s.empty()) s += ' ';
        s += "(" + basis.profile.symbol() + ")";
        if (basis.dim() > 1) s += "_" + std::to_string(basis.dim());
    }
    return s;
}

Json rational_vector_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_fraction_string(q));
    return out;
}

Json matrix_json(const RatMatrix& m) {
    Json entries = Json::array();
    for (const auto& [key, value] : m.entries()) entries.push_back(Json::array({key.first, key.second, to_fraction_string(value)}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json slice_json(const WeightSlice& slice, bool with_coboundaries) {
    Json degrees = Json::array();
    for (int d = 0; d <= slice.max_degree(); ++d) {
        Json profiles = Json::array();
        for (const auto& basis : slice.block(d).profiles) {
            if (basis.dim() == 0) continue;
            profiles.push_back(Json{{"slots", basis.profile.slots()}, {"dim", basis.dim()}});
        }
        degrees.push_back(Json{{"degree", d}, {"profiles", std::move(profiles)}, {"dim", slice.dim(d)}});
    }
    Json out{{"variant", to_string(slice.variant())}, {"weight", slice.weight()}, {"degrees", std::move(degrees)}};
    if (with_coboundaries) {
        Json cob = Json::array();
        for (std::size_t d = 0; d < slice.coboundary_count(); ++d) {
            Json m = matrix_json(slice.coboundary(static_cast<int>(d)));
            Json entry{{"from_degree", d}};
            entry.update(m);
            cob.push_back(std::move(entry));
        }
        out["coboundaries"] = std::move(cob);
    }
    return out;
}

Json cohomology_json(const WeightSlice& slice) {
    Json h = Json::array();
    for (const auto& [d, n] : cohomology_dims(slice)) h.push_back(Json{{"degree", d}, {"dim", n}});
    return Json{{"variant", to_string(slice.variant())},
                {"weight", slice.weight()},
                {"euler_characteristic", euler_characteristic(slice)},
                {"cohomology", std::move(h)}};
}

Json named_class_json(const NamedClass& c, const WeightSlice* slice) {
    Json out{{"name", c.name},
             {"variant", to_string(c.cochain.variant)},
             {"degree", c.cochain.degree},
             {"weight", c.cochain.weight},
             {"normalization", c.normalization},
             {"coefficients", rational_vector_json(c.cochain.coordinates)}};
    if (slice) out["support_profiles"] = support_profiles(*slice, c.cochain.degree, c.cochain.coordinates);
    return out;
}

Json factorization_json(const FactorizationReport& report) {
    const auto& e = report.eta;
    Json eta{{"degree", e.eta.cochain.degree},
             {"weight", e.eta.cochain.weight},
             {"support_profiles", e.support_profiles},
             {"support_restricted", e.support_restricted},
             {"coefficients", rational_vector_json(e.eta.cochain.coordinates)}};
    if (e.obstruction) eta["obstruction"] = *e.obstruction;
    Json gkf{{"degree", e.gkf.cochain.degree},
             {"weight", e.gkf.cochain.weight},
             {"coefficients", rational_vector_json(e.gkf.cochain.coordinates)}};
    Json checks{{"closed", e.closed},
                {"non_exact", e.non_exact},
                {"chain_map", report.chain_map},
                {"injective", report.injective},
                {"iso", report.iso},
                {"p1_line", report.p1_line}};
    return Json{{"eta", std::move(eta)}, {"gkf", std::move(gkf)}, {"checks", std::move(checks)}, {"passed", report.all_passed()}};
}

Json series_json(const LaurentSeries& s) {
    Json coeffs = Json::array();
    for (const auto& [e, c] : s.coeffs) coeffs.push_back(Json{{"exp", e}, {"value", to_fraction_string(c)}});
    return Json{{"variable", "t"}, {"truncation", s.truncation}, {"coefficients", std::move(coeffs)}, {"text", s.to_string()}};
}

Json stabilization_json(const StabilizationReport& r) {
    Json series = Json::array();
    for (std::size_t i = 0; i < r.series.size(); ++i) {
        Json entry{{"n", i + 1}};
        entry.update(series_json(r.series[i]));
        series.push_back(std::move(entry));
    }
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json values = Json::array();
        for (const auto& v : row.by_n) values.push_back(v ? Json(v->get_str()) : Json(nullptr));
        Json entry{{"exp", row.exponent}, {"by_n", std::move(values)}, {"stabilized", row.stabilized}};
        entry["stable_target"] = row.stable_target ? Json(row.stable_target->get_str()) : Json(nullptr);
        entry["algebra_target"] = row.algebra_target ? Json(row.algebra_target->get_str()) : Json(nullptr);
        rows.push_back(std::move(entry));
    }
    return Json{{"truncation", r.truncation}, {"max_n", r.max_n}, {"series", std::move(series)}, {"rows", std::move(rows)}};
}

}  // namespace gfc
