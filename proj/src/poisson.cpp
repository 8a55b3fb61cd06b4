#include "gfc/poisson.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gfc {
namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Number of compositions of `total` into `parts` non-negative parts.
std::size_t compositions(int total, int parts) {
    if (parts == 0) return total == 0 ? 1 : 0;
    return binomial(static_cast<std::size_t>(total + parts - 1), static_cast<std::size_t>(parts - 1));
}

void fill(std::vector<Monomial>& out, std::vector<int>& current, std::size_t pos, int remaining) {
    if (pos + 1 == current.size()) {
        current[pos] = remaining;
        out.push_back(Monomial{current});
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        current[pos] = v;
        fill(out, current, pos + 1, remaining - v);
    }
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

int Monomial::sl2_weight() const {
    int w = 0;
    const int n = variables();
    for (int i = 0; i < n; ++i) w += exponents[i] - exponents[n + i];
    return w;
}

std::string Monomial::to_string() const {
    const int n = variables();
    std::string s;
    for (int i = 0; i < 2 * n; ++i) {
        const int e = exponents[i];
        if (e == 0) continue;
        std::string var = (i < n) ? "x" : "y";
        if (n > 1) var += std::to_string((i % n) + 1);
        s += var;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::size_t monomial_count(int n, int k) { return compositions(k, 2 * n); }

std::vector<Monomial> enumerate_monomials(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("enumerate_monomials: need n >= 1, k >= 0");
    std::vector<Monomial> out;
    out.reserve(monomial_count(n, k));
    std::vector<int> current(static_cast<std::size_t>(2 * n), 0);
    fill(out, current, 0, k);
    return out;
}

std::size_t monomial_index(const Monomial& m) {
    const int parts = static_cast<int>(m.exponents.size());
    int remaining = m.degree();
    std::size_t index = 0;
    for (int p = 0; p + 1 < parts; ++p) {
        const int e = m.exponents[p];
        // Every exponent larger than e at this position comes first.
        for (int v = remaining; v > e; --v) index += compositions(remaining - v, parts - p - 1);
        remaining -= e;
    }
    return index;
}

SparseIntVector poisson_bracket(const Monomial& f, const Monomial& g) {
    if (f.exponents.size() != g.exponents.size() || f.exponents.empty() || f.exponents.size() % 2 != 0)
        throw std::invalid_argument("poisson_bracket: mismatched variable counts");
    const int k = f.degree();
    const int l = g.degree();
    if (k + l < 2) throw std::invalid_argument("poisson_bracket: degree underflow (k + l < 2)");
    const int n = f.variables();

    std::map<std::size_t, std::int64_t> acc;
    // sign * (df/dv_f) * (dg/dv_g) for variables v_f, v_g.
    auto add_term = [&](int var_f, int var_g, std::int64_t sign) {
        const std::int64_t cf = f.exponents[var_f];
        const std::int64_t cg = g.exponents[var_g];
        if (cf == 0 || cg == 0) return;
        Monomial m;
        m.exponents.resize(f.exponents.size());
        for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] = f.exponents[i] + g.exponents[i];
        m.exponents[var_f] -= 1;
        m.exponents[var_g] -= 1;
        acc[monomial_index(m)] += sign * cf * cg;
    };
    for (int i = 0; i < n; ++i) {
        add_term(i, n + i, +1);
        add_term(n + i, i, -1);
    }
    SparseIntVector out;
    for (const auto& [idx, c] : acc)
        if (c != 0) out.emplace_back(idx, c);
    return out;
}

BracketTable::BracketTable(int n, int k, int l) : n_(n), k_(k), l_(l) {
    const auto left = enumerate_monomials(n, k);
    const auto right = enumerate_monomials(n, l);
    cols_ = right.size();
    entries_.resize(left.size() * right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) entries_[i * cols_ + j] = poisson_bracket(left[i], right[j]);
}

Sl2Action sl2_action(int k) {
    if (k < 0) throw std::invalid_argument("sl2_action: negative degree");
    const auto basis = enumerate_monomials(1, k);
    const std::size_t dim = basis.size();
    Sl2Action act;
    act.degree = k;
    act.e.assign(dim, std::vector<std::int64_t>(dim, 0));
    act.f = act.e;
    act.h = act.e;
    if (k == 0) return act;

    const Monomial xx{{2, 0}}, yy{{0, 2}}, xy{{1, 1}};
    for (std::size_t j = 0; j < dim; ++j) {
        for (const auto& [i, c] : poisson_bracket(xx, basis[j])) act.e[i][j] += c / 2;
        for (const auto& [i, c] : poisson_bracket(yy, basis[j])) act.f[i][j] -= c / 2;
        for (const auto& [i, c] : poisson_bracket(xy, basis[j])) act.h[i][j] -= c;
    }
    return act;
}

const BracketTable& plane_bracket_table(int k, int l) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<BracketTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{k, l}];
    if (!slot) slot = std::make_unique<BracketTable>(1, k, l);
    return *slot;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix c(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace gfc
