#include "gfc/genfun.hpp"

#include "gfc/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gfc {
namespace {

std::string term_text(const Rational& magnitude, int exponent) {
    std::string power;
    if (exponent == 1) power = "t";
    else if (exponent != 0) power = "t^" + std::to_string(exponent);
    std::string scalar = magnitude.get_den() == 1 ? magnitude.get_num().get_str() : "(" + magnitude.get_str() + ")";
    if (power.empty()) return scalar;
    if (magnitude == 1) return power;
    return scalar + power;
}

// Every composition of `total` into `parts` non-negative integers, in
// reverse-lex order.
void compositions(int total, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        current.push_back(first);
        compositions(total - first, parts - 1, current, out);
        current.pop_back();
    }
}

std::vector<PerchikFactor> factors_for(int n, int total, int k, bool skip_diagonal) {
    std::vector<std::vector<int>> vectors;
    std::vector<int> scratch;
    compositions(total, 2 * n, scratch, vectors);
    std::vector<PerchikFactor> out;
    for (const auto& v : vectors) {
        PerchikFactor f{k, std::vector<int>(n)};
        bool diagonal = true;
        for (int i = 0; i < n; ++i) {
            f.shift[i] = v[i] - v[n + i];
            if (v[i] != v[n + i]) diagonal = false;
        }
        if (skip_diagonal && diagonal) continue;
        out.push_back(std::move(f));
    }
    return out;
}

// Sparse Laurent polynomial in (t, x), used for the factors applied last.
using TailKey = std::pair<int, std::vector<int>>;
using Tail = std::map<TailKey, Integer>;

Tail expand_tail(int n, const std::vector<PerchikFactor>& factors) {
    Tail tail{{{0, std::vector<int>(n, 0)}, Integer(1)}};
    for (const auto& f : factors) {
        Tail next = tail;
        for (const auto& [key, coef] : tail) {
            TailKey shifted{key.first + f.k, key.second};
            for (int i = 0; i < n; ++i) shifted.second[i] += f.shift[i];
            Integer& slot = next[shifted];
            slot -= coef;
            if (slot == 0) next.erase(shifted);
        }
        tail = std::move(next);
    }
    return tail;
}

Integer factorial(int n) {
    Integer r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Constant x-term of prod_{k=1}^{top} p_k(n) times `tail`, for t^lo..t^W.
// `top` is the largest t-exponent needed before the tail shifts it down.
LaurentSeries constant_term(int n, int lo, int W, const std::vector<PerchikFactor>& tail_factors,
                            const GenfunOptions& options) {
    const Tail tail = expand_tail(n, tail_factors);
    int tail_down = 0;  // largest downward t-shift of the tail
    int tail_reach = 0;
    for (const auto& [key, coef] : tail) {
        tail_down = std::max(tail_down, -key.first);
        for (int e : key.second) tail_reach = std::max(tail_reach, std::abs(e));
    }
    const int top = W + tail_down;

    std::vector<PerchikFactor> factors;
    for (int k = 1; k <= top; ++k) {
        auto fk = perchik_factors(n, k);
        factors.insert(factors.end(), fk.begin(), fk.end());
    }

    // Each factor of p_k moves every x-exponent by at most k + 2 <= 3k, so a
    // cell at t with |x_i| > 3(top - t) + tail_reach never reaches x^0.
    const long long box = 3LL * top + tail_reach;
    const long long side = 2 * box + 1;
    long long plane = 1;
    for (int i = 0; i < n; ++i) {
        if (plane > static_cast<long long>(options.budget_ops) / side) throw BudgetExceeded("perchik: x-grid too large");
        plane *= side;
    }
    const unsigned long long cells = static_cast<unsigned long long>(plane) * (top + 1);
    if (cells > options.budget_ops) throw BudgetExceeded("perchik: grid of " + std::to_string(cells) + " cells is over budget");
    auto bound_at = [&](int t) { return options.prune ? std::min<long long>(box, 3LL * (top - t) + tail_reach) : box; };

    // Work estimate: cells visited over all factors.
    unsigned long long work = 0;
    for (const auto& f : factors) {
        for (int t = f.k; t <= top; ++t) {
            unsigned long long visited = 1;
            for (int i = 0; i < n; ++i) visited *= static_cast<unsigned long long>(2 * bound_at(t) + 1);
            work += visited;
        }
        if (work > options.budget_ops)
            throw BudgetExceeded("perchik: n=" + std::to_string(n) + ", W=" + std::to_string(W) + " needs over " +
                                 std::to_string(options.budget_ops) + " cell updates");
    }

    std::vector<long long> stride(n);
    for (int i = 0; i < n; ++i) stride[i] = i == 0 ? 1 : stride[i - 1] * side;

    std::vector<Integer> grid(cells);
    const long long origin = [&] {
        long long o = 0;
        for (int i = 0; i < n; ++i) o += box * stride[i];
        return o;
    }();
    grid[origin] = 1;

    std::vector<long long> coord(n);
    for (const auto& f : factors) {
        long long offset = f.k * plane;
        for (int i = 0; i < n; ++i) offset += f.shift[i] * stride[i];
        // Descending t keeps the source cells (at t - k) unmodified.
        for (int t = top; t >= f.k; --t) {
            const long long bound = bound_at(t);
            const long long src_bound = bound_at(t - f.k);
            std::fill(coord.begin(), coord.end(), -bound);
            while (true) {
                bool inside = true;
                long long idx = t * plane;
                for (int i = 0; i < n; ++i) {
                    idx += (coord[i] + box) * stride[i];
                    const long long s = coord[i] - f.shift[i];
                    if (s < -src_bound || s > src_bound) inside = false;
                }
                if (inside) {
                    const Integer& src = grid[idx - offset];
                    if (src != 0) grid[idx] -= src;
                }
                int i = 0;
                while (i < n && coord[i] == bound) coord[i++] = -bound;
                if (i == n) break;
                ++coord[i];
            }
        }
    }

    const Integer order = factorial(n) * (Integer(1) << n);
    LaurentSeries out(W);
    for (int w = lo; w <= W; ++w) {
        Integer total(0);
        for (const auto& [key, coef] : tail) {
            const int t = w - key.first;
            if (t < 0 || t > top) continue;
            long long idx = t * plane;
            bool inside = true;
            for (int i = 0; i < n; ++i) {
                const long long e = -key.second[i];
                if (e < -box || e > box) inside = false;
                idx += (e + box) * stride[i];
            }
            if (inside) total += coef * grid[idx];
        }
        if (total % order != 0)
            throw InconsistencyError("perchik: constant term at t^" + std::to_string(w) + " is not divisible by n! 2^n");
        out.add(w, Rational(total / order));
    }
    return out;
}

}  // namespace

Rational LaurentSeries::coefficient(int exponent) const {
    if (exponent > truncation) throw std::out_of_range("LaurentSeries: exponent beyond truncation");
    auto it = coeffs.find(exponent);
    return it == coeffs.end() ? Rational(0) : it->second;
}

void LaurentSeries::add(int exponent, const Rational& value) {
    if (exponent > truncation) return;
    Rational& slot = coeffs[exponent];
    slot += value;
    if (slot == 0) coeffs.erase(exponent);
}

int LaurentSeries::lowest_exponent() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }

std::string LaurentSeries::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : coeffs) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (s.empty()) s = (negative ? "-" : "") + term_text(magnitude, e);
        else s += (negative ? " - " : " + ") + term_text(magnitude, e);
    }
    return s;
}

LaurentSeries truncate(const LaurentSeries& s, int order) {
    LaurentSeries out(std::min(order, s.truncation));
    for (const auto& [e, c] : s.coeffs)
        if (e <= out.truncation) out.coeffs[e] = c;
    return out;
}

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
    // Known through min(a.T + low(b), b.T + low(a)).
    const int order = std::min(a.truncation + b.lowest_exponent(), b.truncation + a.lowest_exponent());
    LaurentSeries out(order);
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) out.add(ea + eb, ca * cb);
    return out;
}

bool agree(const LaurentSeries& a, const LaurentSeries& b) {
    const int order = std::min(a.truncation, b.truncation);
    return truncate(a, order).coeffs == truncate(b, order).coeffs;
}

std::vector<PerchikFactor> perchik_factors(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("perchik_factors: need n >= 1, k >= 0");
    return factors_for(n, k + 2, k, k == 0);
}

std::vector<PerchikFactor> perchik_constant_factors(int n) {
    if (n < 1) throw std::invalid_argument("perchik_constant_factors: need n >= 1");
    return factors_for(n, 1, -1, true);
}

LaurentSeries perchik_series(int n, int W, const GenfunOptions& options) {
    if (n < 1 || W < 0) throw std::invalid_argument("perchik_series: need n >= 1, W >= 0");
    return constant_term(n, 0, W, perchik_factors(n, 0), options);
}

LaurentSeries perchik_full_series(int n, int W, const GenfunOptions& options) {
    if (n < 1 || W < -2 * n) throw std::invalid_argument("perchik_full_series: need n >= 1, W >= -2n");
    auto tail = perchik_factors(n, 0);
    const auto constants = perchik_constant_factors(n);
    tail.insert(tail.end(), constants.begin(), constants.end());
    return constant_term(n, -2 * n, W, tail, options);
}

LaurentSeries complex_euler_series(AlgebraVariant variant, int W, std::size_t budget_dim) {
    const int lo = variant == AlgebraVariant::Ham ? -2 : 0;
    if (W < lo) throw std::invalid_argument("complex_euler_series: truncation below the lowest weight");
    LaurentSeries out(W);
    for (int w = lo; w <= W; ++w) {
        long chi = 0;
        for (const auto& [d, dim] : slice_dimensions(variant, w, budget_dim))
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
        out.add(w, Rational(chi));
    }
    return out;
}

LaurentSeries stable_target_series() {
    LaurentSeries s(8);
    s.add(0, 1);
    s.add(2, 1);
    s.add(4, 2);
    s.add(6, 3);
    s.add(8, 6);
    return s;
}

LaurentSeries polynomial_algebra_series(const std::map<int, int>& generators_by_degree, int W) {
    // Multiply by 1/(1 - t^d) once per generator.
    std::vector<Integer> c(W + 1);
    c[0] = 1;
    for (const auto& [d, count] : generators_by_degree) {
        if (d <= 0) throw std::invalid_argument("polynomial_algebra_series: generator degrees must be positive");
        for (int g = 0; g < count; ++g)
            for (int e = d; e <= W; ++e) c[e] += c[e - d];
    }
    LaurentSeries s(W);
    for (int e = 0; e <= W; ++e) s.add(e, Rational(c[e]));
    return s;
}

LaurentSeries trivalent_algebra_series(int W) {
    return polynomial_algebra_series({{2, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 2}, {12, 3}}, std::min(W, 12));
}

StabilizationReport stabilization_report(int max_n, int W, const GenfunOptions& options) {
    if (max_n < 1 || W < 0) throw std::invalid_argument("stabilization_report: need max_n >= 1, W >= 0");
    StabilizationReport report;
    report.truncation = W;
    report.max_n = max_n;
    std::vector<const LaurentSeries*> computed;
    for (int n = 1; n <= max_n; ++n) {
        try {
            report.series.push_back(perchik_series(n, W, options));
            computed.push_back(nullptr);
        } catch (const BudgetExceeded&) {
            computed.push_back(nullptr);
            break;
        }
    }
    for (std::size_t i = 0; i < report.series.size(); ++i) computed[i] = &report.series[i];

    const auto stable = stable_target_series();
    const auto algebra = trivalent_algebra_series(W);
    for (int e = 0; e <= W; ++e) {
        StabilizationRow row;
        row.exponent = e;
        for (const LaurentSeries* s : computed) {
            if (s) row.by_n.emplace_back(s->coefficient(e).get_num());
            else row.by_n.emplace_back(std::nullopt);
        }
        std::vector<Integer> present;
        for (const auto& v : row.by_n)
            if (v) present.push_back(*v);
        row.stabilized = present.size() >= 2 && present[present.size() - 1] == present[present.size() - 2];
        if (e <= stable.truncation) row.stable_target = stable.coefficient(e).get_num();
        if (e <= algebra.truncation) row.algebra_target = algebra.coefficient(e).get_num();
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace gfc
