#pragma once

// Euler-characteristic generating functions in t: the constant-term product
// formula over Laurent polynomials in x_1..x_n, and the series read off the
// n = 1 cochain complexes.

#include "gfc/complex.hpp"
#include "gfc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gfc {

// Coefficients of t^k for k > truncation are unknown, not zero.
struct LaurentSeries {
    std::map<int, Rational> coeffs;  // zero coefficients are not stored
    int truncation = 0;

    LaurentSeries() = default;
    explicit LaurentSeries(int truncation_order) : truncation(truncation_order) {}

    Rational coefficient(int exponent) const;  // throws past the truncation
    void add(int exponent, const Rational& value);
    int lowest_exponent() const;               // 0 for the zero series

    // "1 + t^2 - t^10", "- 3t^24", "t^-2"; "0" for the zero series.
    std::string to_string() const;
    bool operator==(const LaurentSeries&) const = default;
};

LaurentSeries truncate(const LaurentSeries& s, int order);
LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b);
// Coefficients agree at every exponent up to min(a.truncation, b.truncation).
bool agree(const LaurentSeries& a, const LaurentSeries& b);

// One factor (1 - t^k x^{a-b}).
struct PerchikFactor {
    int k = 0;
    std::vector<int> shift;  // a - b
};

// Factors of p_k(n), in the order of enumeration of (a, b). For k = 0 the
// pairs with a == b are skipped; for k >= 1 they stay as (1 - t^k).
std::vector<PerchikFactor> perchik_factors(int n, int k);
// p_{-1}(n): |a + b| = 1, contributing t^{-1} x^{a-b}.
std::vector<PerchikFactor> perchik_constant_factors(int n);

struct GenfunOptions {
    // Caps grid cells and total cell updates; larger requests throw BudgetExceeded.
    std::uint64_t budget_ops = 2'000'000'000ULL;
    // Drop x-exponents that cannot return to 0 before t^W. Off only in tests.
    bool prune = true;
};

// Sum_w chi(H*(ham0_{2n}, Sp)_w) t^w up to t^W.
LaurentSeries perchik_series(int n, int W, const GenfunOptions& options = {});
// Same with the p_{-1} factor included: the ham_{2n} series, starting at t^{-2n}.
LaurentSeries perchik_full_series(int n, int W, const GenfunOptions& options = {});

// Sum_w chi(slice(variant, w)) t^w from the n = 1 cochain dimensions.
LaurentSeries complex_euler_series(AlgebraVariant variant, int W, std::size_t budget_dim = 200000);

// Reference series for the n -> infinity comparison.
LaurentSeries stable_target_series();  // 1 + t^2 + 2t^4 + 3t^6 + 6t^8
// Hilbert series of a polynomial algebra with generators_by_degree[d] generators in degree d.
LaurentSeries polynomial_algebra_series(const std::map<int, int>& generators_by_degree, int W);
LaurentSeries trivalent_algebra_series(int W);  // generators 1,1,1,2,2,3 in degrees 2..12

struct StabilizationRow {
    int exponent = 0;
    std::vector<std::optional<Integer>> by_n;  // index n - 1; empty where not computed
    bool stabilized = false;                   // last two computed values agree
    std::optional<Integer> stable_target;
    std::optional<Integer> algebra_target;
};

struct StabilizationReport {
    int truncation = 0;
    int max_n = 0;
    std::vector<LaurentSeries> series;  // index n - 1
    std::vector<StabilizationRow> rows;
};

// Runs perchik_series for n = 1..max_n, stopping at the first n over budget.
StabilizationReport stabilization_report(int max_n, int W, const GenfunOptions& options = {});

}  // namespace gfc
