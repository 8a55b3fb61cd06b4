#pragma once

// Monomial bases of the symmetric powers S^k H (H = R^{2n}), the Poisson
// bracket as integer structure constants, and the sl2 = S^2 H action for n = 1.
//
// Basis order: monomials of one degree are listed in graded lexicographic
// order with x1 > ... > xn > y1 > ... > yn, i.e. exponent vectors
// (a_1..a_n, b_1..b_n) sorted descending. For n = 1 the index of x^a y^b in
// S^k H is b.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gfc {

struct Monomial {
    // Exponents of x1..xn followed by y1..yn.
    std::vector<int> exponents;

    int variables() const { return static_cast<int>(exponents.size()) / 2; }
    int degree() const;
    // a - b for x^a y^b; only meaningful for n = 1.
    int sl2_weight() const;
    std::string to_string() const;

    auto operator<=>(const Monomial&) const = default;
};

// Sorted by index, no zero coefficients.
using SparseIntVector = std::vector<std::pair<std::size_t, std::int64_t>>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

std::vector<Monomial> enumerate_monomials(int n, int k);
std::size_t monomial_count(int n, int k);
std::size_t monomial_index(const Monomial& m);

// {f, g} = sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i), expanded over the basis of
// S^{k+l-2}. Throws std::invalid_argument when k + l < 2 or the variable
// counts differ.
SparseIntVector poisson_bracket(const Monomial& f, const Monomial& g);

// All brackets S^k x S^l -> S^{k+l-2} for fixed n.
class BracketTable {
public:
    BracketTable(int n, int k, int l);

    int n() const { return n_; }
    int source_degree_left() const { return k_; }
    int source_degree_right() const { return l_; }
    int target_degree() const { return k_ + l_ - 2; }
    const SparseIntVector& entry(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

private:
    int n_;
    int k_;
    int l_;
    std::size_t cols_;
    std::vector<SparseIntVector> entries_;
};

// e = {x^2/2, .}, f = -{y^2/2, .}, h = -{xy, .} on S^k H (n = 1), written as
// integer matrices acting on coefficient columns: M[target][source].
// e.(x^a y^b) = b x^{a+1} y^{b-1}, f.(x^a y^b) = a x^{a-1} y^{b+1},
// h.(x^a y^b) = (a - b) x^a y^b.
struct Sl2Action {
    int degree = 0;
    IntMatrix e;
    IntMatrix f;
    IntMatrix h;
};

Sl2Action sl2_action(int k);

// Shared, lazily built tables for n = 1. Thread-safe; references stay valid
// for the lifetime of the process.
const BracketTable& plane_bracket_table(int k, int l);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace gfc
