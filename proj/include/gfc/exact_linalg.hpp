#pragma once

// Exact linear algebra over Q with GMP integers and rationals.

#include "gfc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfc {

using DenseMatrix = std::vector<RationalVector>;

// Sparse rational matrix. Stored entries are always nonzero and canonical
// (mpq keeps numerator/denominator coprime).
class RatMatrix {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static RatMatrix from_dense(const DenseMatrix& d, std::size_t cols = 0);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& v);
    void add(std::size_t i, std::size_t j, const Rational& v);

    const std::map<Key, Rational>& entries() const { return entries_; }

    DenseMatrix to_dense() const;
    RatMatrix transpose() const;
    RationalVector apply(const RationalVector& v) const;
    RationalVector column(std::size_t j) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<Key, Rational> entries_;
};

struct RrefResult {
    DenseMatrix rows;                 // nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form by rational Gauss-Jordan elimination; pivot is the
// first admissible entry in row-major order.
RrefResult rref(const DenseMatrix& m, std::size_t cols);

// Fraction-free (Bareiss) elimination over Z after clearing row denominators.
std::size_t rank_bareiss(const RatMatrix& m);
// Plain rational Gaussian elimination.
std::size_t rank_gauss(const RatMatrix& m);
// Rank modulo a prime; a lower bound for the rational rank. Returns nullopt if
// some denominator vanishes modulo p.
std::optional<std::size_t> rank_mod_prime(const RatMatrix& m, std::uint64_t p);

// Default word-sized prime for the modular pre-pass (2^61 - 1).
inline constexpr std::uint64_t kRankPrime = 2305843009213693951ULL;

// Exact rank. The modular rank is used as a shortcut only when it already
// reaches min(rows, cols); otherwise Bareiss elimination decides.
std::size_t rank(const RatMatrix& m);

// Right kernel, as rows of a reduced echelon basis (leading coefficient 1).
std::vector<RationalVector> kernel_basis(const RatMatrix& m);

// Echelon basis of the column space, as vectors of length rows().
std::vector<RationalVector> column_space_basis(const RatMatrix& m);

// If v = m x has a solution, returns one such x (free variables set to 0).
// Throws std::invalid_argument when v.size() != m.rows().
std::optional<RationalVector> in_column_span(const RatMatrix& m, const RationalVector& v);

// Determinant of a small square matrix by rational elimination.
Rational determinant(DenseMatrix m);

// Text exchange format: "rows cols" header, then "i j p/q" per nonzero entry
// sorted by (i, j).
std::string to_matrix_text(const RatMatrix& m);
RatMatrix parse_matrix_text(const std::string& text);

}  // namespace gfc
