#include "gfc/characteristic.hpp"

#include "gfc/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfc {
namespace {

Integer factorial(int n) {
    Integer r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

TautologicalForm form(int i, std::vector<int> js = {}) { return TautologicalForm(i, std::move(js)); }

RatMatrix append_columns(const RatMatrix& m, const std::vector<RationalVector>& extra) {
    RatMatrix out(m.rows(), m.cols() + extra.size());
    for (const auto& [k, v] : m.entries()) out.set(k.first, k.second, v);
    for (std::size_t j = 0; j < extra.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, m.cols() + j, extra[j][i]);
    return out;
}

// Image of delta_{d-1} as a matrix into C^d; the zero map when d == 0.
RatMatrix incoming(const WeightSlice& slice, int degree) {
    if (degree == 0) return RatMatrix(slice.dim(0), 0);
    return slice.coboundary(degree - 1);
}

std::optional<RatMatrix> outgoing(const WeightSlice& slice, int degree) {
    if (static_cast<std::size_t>(degree) < slice.coboundary_count()) return slice.coboundary(degree);
    if (slice.complete() && degree == slice.max_degree()) return RatMatrix(0, slice.dim(degree));
    return std::nullopt;
}

Cochain make_cochain(const WeightSlice& slice, int degree, RationalVector coords) {
    return Cochain{slice.variant(), slice.weight(), degree, std::move(coords)};
}

NamedClass named(std::string name, Cochain c, std::string note) {
    normalize_leading(c.coordinates);
    return NamedClass{std::move(name), std::move(c), std::move(note)};
}

}  // namespace

TautologicalForm::TautologicalForm(int i, std::vector<int> js) : upper(i), lower(std::move(js)) {
    if (upper < 1 || upper > 2) throw std::invalid_argument("TautologicalForm: upper index must be 1 or 2");
    for (int j : lower)
        if (j < 1 || j > 2) throw std::invalid_argument("TautologicalForm: lower index must be 1 or 2");
    std::sort(lower.begin(), lower.end());
}

Rational TautologicalForm::evaluate(const Generator& g) const {
    if (g.k != slot_degree()) return 0;
    const int a = g.k - g.index;
    const int b = g.index;
    const int ones = static_cast<int>(std::count(lower.begin(), lower.end(), 1));
    const int twos = static_cast<int>(lower.size()) - ones;
    const int order_sign = lower.size() % 2 == 0 ? 1 : -1;
    const Integer magnitude = factorial(a) * factorial(b);
    if (upper == 1) {
        // f_1 = -dH/dy
        if (b >= 1 && ones == a && twos == b - 1) return Rational(-order_sign * magnitude);
        return 0;
    }
    // f_2 = dH/dx
    if (a >= 1 && ones == a - 1 && twos == b) return Rational(order_sign * magnitude);
    return 0;
}

std::string TautologicalForm::to_string() const {
    std::string s = "d^" + std::to_string(upper);
    if (!lower.empty()) {
        s += "_";
        for (int j : lower) s += std::to_string(j);
    }
    return s;
}

FormExpression FormExpression::single(const TautologicalForm& a) {
    FormExpression e;
    e.terms.emplace_back(Rational(1), std::vector<TautologicalForm>{a});
    return e;
}

FormExpression& FormExpression::operator+=(const FormExpression& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

FormExpression operator*(const Rational& c, FormExpression e) {
    for (auto& t : e.terms) t.first *= c;
    return e;
}

Rational FormExpression::evaluate(const WedgeMonomial& w) const {
    Rational total(0);
    for (const auto& [coef, forms] : terms) {
        if (forms.size() != w.size() || coef == 0) continue;
        DenseMatrix m(forms.size(), RationalVector(w.size()));
        for (std::size_t r = 0; r < forms.size(); ++r)
            for (std::size_t s = 0; s < w.size(); ++s) m[r][s] = forms[r].evaluate(w[s]);
        total += coef * determinant(std::move(m));
    }
    return total;
}

FormExpression wedge(const FormExpression& a, const FormExpression& b) {
    FormExpression out;
    for (const auto& [ca, fa] : a.terms) {
        for (const auto& [cb, fb] : b.terms) {
            auto forms = fa;
            forms.insert(forms.end(), fb.begin(), fb.end());
            out.terms.emplace_back(ca * cb, std::move(forms));
        }
    }
    return out;
}

FormExpression omega_form() { return wedge(FormExpression::single(form(1)), FormExpression::single(form(2))); }

FormExpression curvature_form(int i, int j) {
    FormExpression out;
    for (int k = 1; k <= 2; ++k) out += wedge(FormExpression::single(form(k)), FormExpression::single(form(i, {j, k})));
    return out;
}

FormExpression p1_form() {
    FormExpression out;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) out += wedge(curvature_form(i, j), curvature_form(j, i));
    return out;
}

FormExpression gamma1_form() {
    FormExpression out = Rational(-1) * wedge(FormExpression::single(form(1, {2, 2})), FormExpression::single(form(2, {1, 1})));
    out += Rational(-3) * wedge(FormExpression::single(form(1, {1, 1})), FormExpression::single(form(2, {2, 2})));
    return out;
}

NamedClass build_omega() {
    const auto slice = build_slice(AlgebraVariant::Ham, -2);
    const auto form = omega_form();
    auto coords = express_in_basis(slice, 2, [&](const WedgeMonomial& w) { return form.evaluate(w); });
    if (is_zero_vector(coords)) throw InconsistencyError("omega evaluates to zero");
    return named("omega", make_cochain(slice, 2, std::move(coords)), "delta^1 ^ delta^2, value 1 on x ^ y");
}

NamedClass build_gamma1() {
    const auto slice = build_slice(AlgebraVariant::Ham0, 2);
    const auto form = gamma1_form();
    auto coords = express_in_basis(slice, 2, [&](const WedgeMonomial& w) { return form.evaluate(w); });
    if (is_zero_vector(coords)) throw InconsistencyError("gamma_1 evaluates to zero");
    const Rational scale = coords[0];
    return named("gamma1", make_cochain(slice, 2, std::move(coords)),
                 "-delta^1_22 ^ delta^2_11 - 3 delta^1_11 ^ delta^2_22 = (" + to_fraction_string(scale) + ") * gamma1");
}

NamedClass build_p1() {
    const auto slice = build_slice(AlgebraVariant::Ham, 0);
    const auto form = p1_form();
    auto coords = express_in_basis(slice, 4, [&](const WedgeMonomial& w) { return form.evaluate(w); });
    if (is_zero_vector(coords)) throw InconsistencyError("tr(Omega^2) evaluates to zero");
    Rational scale(0);
    for (const auto& c : coords)
        if (c != 0) {
            scale = c;
            break;
        }
    return named("p1", make_cochain(slice, 4, std::move(coords)),
                 "tr(Omega^2) = (" + to_fraction_string(scale) + ") * p1");
}

std::vector<RatMatrix> wedge_omega_map(const WeightSlice& source, const WeightSlice& target) {
    if (source.variant() != AlgebraVariant::Ham0 || target.variant() != AlgebraVariant::Ham)
        throw std::invalid_argument("wedge_omega_map: expects a ham0 source and a ham target");
    if (target.weight() != source.weight() - 2) throw std::invalid_argument("wedge_omega_map: target weight must be source weight - 2");

    const auto omega = omega_form();
    std::vector<RatMatrix> maps;
    for (int d = 0; d <= source.max_degree() && d + 2 <= target.max_degree(); ++d) {
        const auto& block = source.block(d);
        RatMatrix lambda(target.dim(d + 2), block.dim);
        for (std::size_t j = 0; j < block.dim; ++j) {
            std::size_t local = 0;
            const InvariantBasis& owner = source.profile_of(d, j, &local);
            // (phi ^ omega)(x ^ y ^ r) = omega(x ^ y) phi(r); chains with fewer
            // than two S^1 slots pair to zero.
            auto values = [&](const WedgeMonomial& c) -> Rational {
                if (c.size() < 2 || c[0].k != 1 || c[1].k != 1) return 0;
                const WedgeMonomial rest(c.begin() + 2, c.end());
                auto pos = owner.position(rest);
                if (!pos) return 0;
                const Rational& phi = owner.vectors[local][*pos];
                if (phi == 0) return 0;
                return omega.evaluate(WedgeMonomial{c[0], c[1]}) * phi;
            };
            const auto column = express_in_basis(target, d + 2, values);
            for (std::size_t i = 0; i < column.size(); ++i) lambda.set(i, j, column[i]);
        }
        maps.push_back(std::move(lambda));
    }
    return maps;
}

bool chain_map_holds(const WeightSlice& source, const WeightSlice& target, const std::vector<RatMatrix>& maps) {
    for (std::size_t d = 0; d < maps.size(); ++d) {
        const int deg = static_cast<int>(d);
        const auto target_delta = outgoing(target, deg + 2);
        const auto source_delta = outgoing(source, deg);
        if (!target_delta || !source_delta) continue;
        const RatMatrix left = *target_delta * maps[d];
        if (d + 1 < maps.size()) {
            if (!(left == maps[d + 1] * *source_delta)) return false;
        } else if (source_delta->rows() == 0) {
            if (!left.is_zero()) return false;
        }
    }
    return true;
}

bool injective_on_cochains(const WeightSlice& source, const std::vector<RatMatrix>& maps) {
    for (std::size_t d = 0; d < maps.size(); ++d)
        if (rank(maps[d]) != source.dim(static_cast<int>(d))) return false;
    return true;
}

std::vector<RationalVector> cohomology_representatives(const WeightSlice& slice, int degree) {
    const auto delta = outgoing(slice, degree);
    if (!delta) throw std::out_of_range("cohomology_representatives: degree not determined in this slice");
    std::vector<RationalVector> cycles = kernel_basis(*delta);
    RatMatrix span = incoming(slice, degree);
    std::vector<RationalVector> reps;
    for (auto& z : cycles) {
        if (in_column_span(span, z)) continue;
        span = append_columns(span, {z});
        reps.push_back(std::move(z));
    }
    return reps;
}

std::vector<IsoReport> verify_iso_in_cohomology(int source_weight, const SliceOptions& options) {
    const auto source = build_slice(AlgebraVariant::Ham0, source_weight, options);
    const auto target = build_slice(AlgebraVariant::Ham, source_weight - 2, options);
    const auto maps = wedge_omega_map(source, target);
    const auto source_h = cohomology_dims(source);
    const auto target_h = cohomology_dims(target);

    std::vector<IsoReport> reports;
    for (const auto& [d, h] : source_h) {
        if (h == 0) continue;
        IsoReport r;
        r.source_weight = source_weight;
        r.degree = d;
        r.source_dim = h;
        auto it = target_h.find(d + 2);
        r.target_dim = it == target_h.end() ? 0 : it->second;
        if (static_cast<std::size_t>(d) >= maps.size()) {
            reports.push_back(r);
            continue;
        }
        std::vector<RationalVector> images;
        for (const auto& z : cohomology_representatives(source, d)) images.push_back(maps[d].apply(z));
        r.images_closed = true;
        if (const auto delta = outgoing(target, d + 2))
            for (const auto& v : images)
                if (!is_zero_vector(delta->apply(v))) r.images_closed = false;
        const RatMatrix exact = incoming(target, d + 2);
        r.image_rank = rank(append_columns(exact, images)) - rank(exact);
        r.iso = r.images_closed && r.image_rank == r.source_dim && r.source_dim == r.target_dim;
        reports.push_back(r);
    }
    return reports;
}

std::vector<IrrepProfile> eta_preferred_profiles() {
    return {IrrepProfile::parse("3^3 4 7"), IrrepProfile::parse("3^2 4^2 6"), IrrepProfile::parse("3^2 4 5^2")};
}

EtaResult extract_eta(const WeightSlice& ham0_w10, const WeightSlice& ham_w8) {
    constexpr int kDegree = 5;
    const auto delta5 = outgoing(ham0_w10, kDegree);
    if (!delta5) throw std::invalid_argument("extract_eta: ham0 slice must reach degree 6");
    const RatMatrix delta4 = incoming(ham0_w10, kDegree);
    const auto cycles = kernel_basis(*delta5);
    const std::size_t exact_rank = rank(delta4);
    if (cycles.size() - exact_rank != 1)
        throw InconsistencyError("extract_eta: H^5(ham0)_10 has dimension " + std::to_string(cycles.size() - exact_rank) +
                                 ", expected 1");

    // Columns of the preferred profiles inside C^5.
    const auto& block = ham0_w10.block(kDegree);
    const auto preferred = eta_preferred_profiles();
    std::vector<std::size_t> columns;
    for (std::size_t p = 0; p < block.profiles.size(); ++p)
        if (std::find(preferred.begin(), preferred.end(), block.profiles[p].profile) != preferred.end())
            for (std::size_t i = 0; i < block.profiles[p].dim(); ++i) columns.push_back(block.offsets[p] + i);

    RatMatrix restricted(delta5->rows(), columns.size());
    for (const auto& [k, v] : delta5->entries()) {
        auto it = std::find(columns.begin(), columns.end(), k.second);
        if (it != columns.end()) restricted.set(k.first, static_cast<std::size_t>(it - columns.begin()), v);
    }

    EtaResult result;
    std::optional<RationalVector> eta;
    for (const auto& local : kernel_basis(restricted)) {
        RationalVector full(block.dim);
        for (std::size_t c = 0; c < columns.size(); ++c) full[columns[c]] = local[c];
        if (!in_column_span(delta4, full)) {
            eta = std::move(full);
            result.support_restricted = true;
            break;
        }
    }
    if (!eta) {
        result.obstruction = "no non-exact cocycle is supported on the preferred profiles";
        for (const auto& z : cycles)
            if (!in_column_span(delta4, z)) {
                eta = z;
                break;
            }
    }
    result.eta = named("eta", make_cochain(ham0_w10, kDegree, std::move(*eta)),
                       "unit leading coefficient in the C^5(ham0)_10 basis");
    result.support_profiles = support_profiles(ham0_w10, kDegree, result.eta.cochain.coordinates);

    const auto maps = wedge_omega_map(ham0_w10, ham_w8);
    if (maps.size() <= static_cast<std::size_t>(kDegree)) throw std::invalid_argument("extract_eta: ham slice must reach degree 7");
    Cochain gkf = make_cochain(ham_w8, kDegree + 2, maps[kDegree].apply(result.eta.cochain.coordinates));
    result.gkf = NamedClass{"GKF", gkf, "eta ^ omega"};
    result.closed = is_cocycle(ham_w8, gkf);
    result.non_exact = !is_coboundary(ham_w8, gkf);
    return result;
}

EtaResult extract_eta() { return extract_eta(build_slice(AlgebraVariant::Ham0, 10), build_slice(AlgebraVariant::Ham, 8)); }

bool gamma1_omega_spans_p1() {
    const auto source = build_slice(AlgebraVariant::Ham0, 2);
    const auto target = build_slice(AlgebraVariant::Ham, 0);
    const auto maps = wedge_omega_map(source, target);
    const auto gamma1 = build_gamma1();
    const auto p1 = build_p1();
    const RationalVector image = maps.at(2).apply(gamma1.cochain.coordinates);
    if (is_zero_vector(image)) return false;
    const RatMatrix exact = incoming(target, 4);
    const std::size_t base = rank(exact);
    return rank(append_columns(exact, {image})) == base + 1 &&
           rank(append_columns(exact, {image, p1.cochain.coordinates})) == base + 1;
}

bool FactorizationReport::all_passed() const {
    return eta.closed && eta.non_exact && chain_map && injective && iso && p1_line;
}

FactorizationReport factorize(const SliceOptions& options) {
    FactorizationReport report;
    const auto source = build_slice(AlgebraVariant::Ham0, 10, options);
    const auto target = build_slice(AlgebraVariant::Ham, 8, options);
    const auto maps = wedge_omega_map(source, target);
    report.chain_map = chain_map_holds(source, target, maps);
    report.injective = injective_on_cochains(source, maps);
    report.eta = extract_eta(source, target);
    report.iso = true;
    for (int w : {0, 2, 10}) {
        const auto reports = verify_iso_in_cohomology(w, options);
        if (reports.empty()) report.iso = false;
        for (const auto& r : reports) report.iso = report.iso && r.iso;
    }
    report.p1_line = gamma1_omega_spans_p1();
    return report;
}

}  // namespace gfc
