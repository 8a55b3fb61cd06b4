#include "gfc/invariants.hpp"

#include "gfc/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfc {
namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Integer factorial(int n) {
    Integer r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// All strictly increasing m-subsets of {0..size-1}, lexicographic.
std::vector<std::vector<int>> subsets(int size, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == m) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= size - (m - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

using LaurentPoly = std::map<int, Integer>;

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly c;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) c[ea + eb] += ca * cb;
    return c;
}

// q-character of Lambda^m S^k H: elementary symmetric polynomial e_m in the
// weights q^{k}, q^{k-2}, ..., q^{-k}.
LaurentPoly exterior_character(int k, int m) {
    // layers[j] = e_j of the weights processed so far.
    std::vector<LaurentPoly> layers(static_cast<std::size_t>(m) + 1);
    layers[0][0] = 1;
    for (int i = 0; i <= k; ++i) {
        const int w = k - 2 * i;
        for (int j = m; j >= 1; --j)
            for (const auto& [e, c] : layers[j - 1]) layers[j][e + w] += c;
    }
    return layers[m];
}

template <typename Step>
std::vector<std::pair<WedgeMonomial, std::int64_t>> apply_derivation(const WedgeMonomial& w, Step step) {
    std::vector<std::pair<WedgeMonomial, std::int64_t>> out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        Generator g = w[p];
        const std::int64_t coef = step(g);
        if (coef == 0) continue;
        WedgeMonomial next = w;
        next[p] = g;
        const int sign = canonicalize(next);
        if (sign == 0) continue;
        out.emplace_back(std::move(next), sign * coef);
    }
    return out;
}

}  // namespace

int sl2_weight(const WedgeMonomial& w) {
    int s = 0;
    for (const auto& g : w) s += g.sl2_weight();
    return s;
}

std::string to_string(const WedgeMonomial& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "^";
        const int a = w[i].k - w[i].index;
        const int b = w[i].index;
        std::string mono;
        if (a > 0) mono += a == 1 ? "x" : "x" + std::to_string(a);
        if (b > 0) mono += b == 1 ? "y" : "y" + std::to_string(b);
        s += mono.empty() ? "1" : mono;
    }
    return s;
}

int canonicalize(WedgeMonomial& w) {
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
            if (w[j - 1] == w[j]) return 0;
            std::swap(w[j - 1], w[j]);
            sign = -sign;
        }
    }
    return sign;
}

IrrepProfile::IrrepProfile(std::map<int, int> multiplicities) {
    for (const auto& [k, m] : multiplicities) {
        if (k < 0 || m < 0) throw std::invalid_argument("IrrepProfile: negative slot or multiplicity");
        if (m > 0) mult_[k] = m;
    }
}

IrrepProfile IrrepProfile::parse(const std::string& symbol) {
    std::string s;
    for (char c : symbol)
        if (c != '(' && c != ')') s += c;
    std::istringstream is(s);
    std::map<int, int> mult;
    std::string token;
    while (is >> token) {
        const auto caret = token.find('^');
        try {
            const int k = std::stoi(token.substr(0, caret));
            const int m = caret == std::string::npos ? 1 : std::stoi(token.substr(caret + 1));
            mult[k] += m;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad profile symbol: " + symbol);
        }
    }
    return IrrepProfile(mult);
}

IrrepProfile IrrepProfile::of(const WedgeMonomial& w) {
    std::map<int, int> mult;
    for (const auto& g : w) ++mult[g.k];
    return IrrepProfile(mult);
}

int IrrepProfile::multiplicity(int k) const {
    auto it = mult_.find(k);
    return it == mult_.end() ? 0 : it->second;
}

int IrrepProfile::degree() const {
    int d = 0;
    for (const auto& [k, m] : mult_) d += m;
    return d;
}

int IrrepProfile::weight() const {
    int w = 0;
    for (const auto& [k, m] : mult_) w += m * (k - 2);
    return w;
}

int IrrepProfile::polynomial_degree() const {
    int d = 0;
    for (const auto& [k, m] : mult_) d += m * k;
    return d;
}

bool IrrepProfile::valid() const {
    for (const auto& [k, m] : mult_)
        if (m > k + 1) return false;
    return true;
}

std::vector<int> IrrepProfile::slots() const {
    std::vector<int> out;
    for (const auto& [k, m] : mult_) out.insert(out.end(), static_cast<std::size_t>(m), k);
    return out;
}

std::string IrrepProfile::symbol() const {
    std::string s;
    for (const auto& [k, m] : mult_) {
        if (!s.empty()) s += ' ';
        s += std::to_string(k);
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

std::size_t wedge_basis_size(const IrrepProfile& p) {
    std::size_t n = 1;
    for (const auto& [k, m] : p.multiplicities()) n *= binomial(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(m));
    return n;
}

std::vector<WedgeMonomial> wedge_basis(const IrrepProfile& p, std::size_t budget) {
    const std::size_t size = wedge_basis_size(p);
    if (size > budget)
        throw BudgetExceeded("wedge space of profile (" + p.symbol() + ") has " + std::to_string(size) +
                             " monomials, budget is " + std::to_string(budget));
    std::vector<WedgeMonomial> out{WedgeMonomial{}};
    for (const auto& [k, m] : p.multiplicities()) {
        const auto group = subsets(k + 1, m);
        std::vector<WedgeMonomial> next;
        next.reserve(out.size() * group.size());
        for (const auto& prefix : out) {
            for (const auto& sub : group) {
                WedgeMonomial w = prefix;
                for (int idx : sub) w.push_back(Generator{k, idx});
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::optional<std::size_t> InvariantBasis::position(const WedgeMonomial& w) const {
    auto it = std::lower_bound(support.begin(), support.end(), w);
    if (it == support.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - support.begin());
}

std::vector<std::pair<WedgeMonomial, std::int64_t>> apply_raising(const WedgeMonomial& w) {
    // e.(x^a y^b) = b x^{a+1} y^{b-1}
    return apply_derivation(w, [](Generator& g) -> std::int64_t {
        if (g.index == 0) return 0;
        const std::int64_t c = g.index;
        --g.index;
        return c;
    });
}

std::vector<std::pair<WedgeMonomial, std::int64_t>> apply_lowering(const WedgeMonomial& w) {
    // f.(x^a y^b) = a x^{a-1} y^{b+1}
    return apply_derivation(w, [](Generator& g) -> std::int64_t {
        const std::int64_t a = g.k - g.index;
        if (a == 0) return 0;
        ++g.index;
        return a;
    });
}

InvariantBasis invariant_basis(const IrrepProfile& p, std::size_t budget) {
    if (!p.valid()) throw std::invalid_argument("invariant_basis: invalid profile (" + p.symbol() + ")");
    InvariantBasis result;
    result.profile = p;
    if (p.polynomial_degree() % 2 != 0) return result;  // no weight-zero monomials

    std::vector<WedgeMonomial> lower, upper;
    for (auto& w : wedge_basis(p, budget)) {
        const int wt = sl2_weight(w);
        if (wt == 0)
            result.support.push_back(std::move(w));
        else if (wt == -2)
            lower.push_back(std::move(w));
        else if (wt == 2)
            upper.push_back(std::move(w));
    }
    if (result.support.empty()) return result;

    RatMatrix constraints(lower.size() + upper.size(), result.support.size());
    std::size_t row = 0;
    auto add_row = [&](const std::vector<std::pair<WedgeMonomial, std::int64_t>>& terms) {
        for (const auto& [w, c] : terms) {
            auto pos = result.position(w);
            if (!pos) throw std::logic_error("invariant_basis: sl2 image left the weight-zero space");
            constraints.add(row, *pos, Rational(static_cast<long>(c)));
        }
        ++row;
    };
    for (const auto& w : lower) add_row(apply_raising(w));
    for (const auto& w : upper) add_row(apply_lowering(w));

    result.vectors = kernel_basis(constraints);
    for (const auto& v : result.vectors) {
        std::size_t i = 0;
        while (v[i] == 0) ++i;
        result.pivots.push_back(i);
    }
    return result;
}

std::size_t invariant_dim(const IrrepProfile& p, std::size_t budget) { return invariant_basis(p, budget).dim(); }

std::size_t character_dim_oracle(const IrrepProfile& p) {
    LaurentPoly total{{0, Integer(1)}};
    for (const auto& [k, m] : p.multiplicities()) total = multiply(total, exterior_character(k, m));
    auto coef = [&](int e) {
        auto it = total.find(e);
        return it == total.end() ? Integer(0) : it->second;
    };
    const Integer mult = coef(0) - coef(2);
    if (mult < 0) throw std::logic_error("character_dim_oracle: negative multiplicity");
    return mult.get_ui();
}

Rational symplectic_pairing(const Generator& u, const Generator& v) {
    if (u.k != v.k) return 0;
    const int a = u.k - u.index;
    const int b = u.index;
    // partner of x^a y^b is x^b y^a, i.e. index a
    if (v.index != a) return 0;
    Rational value(factorial(a) * factorial(b), factorial(u.k));
    value.canonicalize();
    return (b % 2 == 0) ? value : Rational(-value);
}

Rational wedge_pairing(const WedgeMonomial& u, const WedgeMonomial& v) {
    if (u.size() != v.size()) return 0;
    std::vector<RationalVector> m(u.size(), RationalVector(v.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = symplectic_pairing(u[i], v[j]);
    return determinant(std::move(m));
}

RationalVector cochain_from_tensor(const std::vector<std::pair<Rational, WedgeMonomial>>& tensor,
                                   const std::vector<WedgeMonomial>& support) {
    RationalVector out(support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
        for (const auto& [c, w] : tensor) out[i] += c * wedge_pairing(w, support[i]);
    return out;
}

}  // namespace gfc
