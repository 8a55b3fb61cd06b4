#include "doctest.h"

#include "gfc/exact_linalg.hpp"

#include <random>
#include <stdexcept>

using namespace gfc;

namespace {

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Sparse random matrix with small rational entries; rank deficiency comes
// from appending combinations of earlier rows.
RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t dependent) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), coin(0, 2);
    RatMatrix m(rows + dependent, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (coin(rng) == 0) m.set(i, j, q(num(rng), den(rng)));
    std::uniform_int_distribution<std::size_t> pick(0, rows - 1);
    for (std::size_t d = 0; d < dependent; ++d) {
        const std::size_t a = pick(rng), b = pick(rng);
        const Rational s(num(rng), den(rng));
        for (std::size_t j = 0; j < cols; ++j) m.set(rows + d, j, m.at(a, j) + s * m.at(b, j));
    }
    return m;
}

}  // namespace

TEST_CASE("trivial ranks") {
    CHECK(rank(RatMatrix(4, 3)) == 0);
    CHECK(rank(RatMatrix::identity(5)) == 5);
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    CHECK(kernel_basis(RatMatrix(2, 3)).size() == 3);
}

TEST_CASE("Bareiss, Gauss and modular ranks agree") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 9, cols = 1 + (trial * 7) % 11, dep = trial % 4;
        const auto m = random_matrix(rng, rows, cols, dep);
        const auto r = rank_bareiss(m);
        CHECK(rank_gauss(m) == r);
        CHECK(rank(m) == r);
        CHECK(rank(m.transpose()) == r);
        CHECK(rank_bareiss(m.transpose()) == r);
        if (auto rp = rank_mod_prime(m, kRankPrime)) CHECK(*rp <= r);
        CHECK(rref(m.to_dense(), m.cols()).pivots.size() == r);
        CHECK(column_space_basis(m).size() == r);
    }
}

TEST_CASE("kernel basis is a reduced echelon basis of the right kernel") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_matrix(rng, 2 + trial % 5, 4 + trial % 6, trial % 3);
        const auto ker = kernel_basis(m);
        CHECK(ker.size() == m.cols() - rank(m));
        for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
        for (std::size_t i = 0; i < ker.size(); ++i) {
            std::size_t lead = 0;
            while (ker[i][lead] == 0) ++lead;
            CHECK(ker[i][lead] == 1);
            for (std::size_t j = 0; j < ker.size(); ++j)
                if (j != i) CHECK(ker[j][lead] == 0);
        }
    }
}

TEST_CASE("column span membership") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_matrix(rng, 3 + trial % 4, 2 + trial % 5, 1);
        RationalVector x(m.cols());
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = q(static_cast<long>(j) - 2, 3);
        const auto b = m.apply(x);
        const auto sol = in_column_span(m, b);
        REQUIRE(sol);
        CHECK(m.apply(*sol) == b);

        // A vector outside the span exists whenever rank < rows.
        if (rank(m) < m.rows()) {
            bool found_outside = false;
            for (std::size_t i = 0; i < m.rows() && !found_outside; ++i) {
                RationalVector e(m.rows());
                e[i] = 1;
                found_outside = !in_column_span(m, e).has_value();
            }
            CHECK(found_outside);
        }
    }
    CHECK_THROWS_AS(in_column_span(RatMatrix(3, 2), RationalVector(2)), std::invalid_argument);
}

TEST_CASE("sparse storage drops zeros") {
    RatMatrix m(2, 2);
    m.set(0, 0, Rational(2, 4));
    m.add(0, 0, Rational(-2, 4));
    CHECK(m.is_zero());
    m.set(1, 1, Rational(6, 4));
    CHECK(m.at(1, 1).get_num() == 3);
    CHECK(m.at(1, 1).get_den() == 2);
}

TEST_CASE("determinant") {
    CHECK(determinant({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == -2);
    CHECK(determinant({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == -1);
    CHECK(determinant({{q(1, 2), q(1, 3)}, {q(1, 4), q(1, 6)}}) == 0);
    CHECK(determinant({}) == 1);
}

TEST_CASE("matrix text round trip") {
    std::mt19937 rng(3);
    const auto m = random_matrix(rng, 4, 5, 1);
    const auto text = to_matrix_text(m);
    CHECK(text.rfind("5 5\n", 0) == 0);
    CHECK(parse_matrix_text(text) == m);
    CHECK(to_fraction_string(Rational(3)) == "3/1");
    CHECK(parse_fraction("-6/4") == q(-3, 2));
    CHECK(parse_fraction("7") == 7);
    CHECK_THROWS(parse_fraction("1/0"));
}
