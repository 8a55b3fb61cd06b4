#include "doctest.h"

#include "gfc/poisson.hpp"

#include <map>
#include <stdexcept>

using namespace gfc;

namespace {

// Polynomials as exponent vector -> coefficient, differentiated term by term.
using Poly = std::map<std::vector<int>, std::int64_t>;

Poly derivative(const Poly& p, int var) {
    Poly out;
    for (const auto& [e, c] : p) {
        if (e[var] == 0) continue;
        auto d = e;
        --d[var];
        out[d] += c * e[var];
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly product(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly sum(Poly a, const Poly& b, std::int64_t sign = 1) {
    for (const auto& [e, c] : b) a[e] += sign * c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

Poly naive_bracket(const Poly& f, const Poly& g, int n) {
    Poly out;
    for (int i = 0; i < n; ++i) {
        out = sum(out, product(derivative(f, i), derivative(g, n + i)));
        out = sum(out, product(derivative(f, n + i), derivative(g, i)), -1);
    }
    return out;
}

Poly from_sparse(const SparseIntVector& v, int n, int degree) {
    const auto basis = enumerate_monomials(n, degree);
    Poly p;
    for (const auto& [i, c] : v) p[basis[i].exponents] = c;
    return p;
}

Poly bracket_poly(const Poly& f, const Poly& g) {
    Poly out;
    for (const auto& [ef, cf] : f)
        for (const auto& [eg, cg] : g) {
            const Monomial mf{ef}, mg{eg};
            if (mf.degree() + mg.degree() < 2) continue;
            for (const auto& [e, c] : from_sparse(poisson_bracket(mf, mg), mf.variables(), mf.degree() + mg.degree() - 2))
                out[e] += cf * cg * c;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly single(const Monomial& m) { return Poly{{m.exponents, 1}}; }

}  // namespace

TEST_CASE("monomial enumeration and ranking") {
    CHECK(monomial_count(1, 4) == 5);
    CHECK(monomial_count(2, 3) == 20);
    for (int n : {1, 2, 3})
        for (int k = 0; k <= 5; ++k) {
            const auto basis = enumerate_monomials(n, k);
            REQUIRE(basis.size() == monomial_count(n, k));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                CHECK(monomial_index(basis[i]) == i);
                CHECK(basis[i].degree() == k);
                if (i > 0) CHECK(basis[i - 1] > basis[i]);
            }
        }
    // n = 1: index of x^a y^b is b
    const auto s3 = enumerate_monomials(1, 3);
    CHECK(s3[0].exponents == std::vector<int>{3, 0});
    CHECK(s3[2].exponents == std::vector<int>{1, 2});
    CHECK(s3[2].sl2_weight() == -1);
}

TEST_CASE("bracket matches naive differentiation") {
    for (int n : {1, 2}) {
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; l <= 4; ++l) {
                if (k + l < 2) continue;
                for (const auto& f : enumerate_monomials(n, k))
                    for (const auto& g : enumerate_monomials(n, l)) {
                        const auto fast = from_sparse(poisson_bracket(f, g), n, k + l - 2);
                        CHECK(fast == naive_bracket(single(f), single(g), n));
                    }
            }
    }
}

TEST_CASE("plane bracket closed form") {
    // {x^a y^b, x^c y^d} = (ad - bc) x^{a+c-1} y^{b+d-1}
    for (int k = 1; k <= 6; ++k)
        for (int l = 1; l <= 6; ++l) {
            if (k + l < 2) continue;
            const auto& table = plane_bracket_table(k, l);
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= l; ++j) {
                    const long a = k - i, b = i, c = l - j, d = j;
                    const long coef = a * d - b * c;
                    const auto& e = table.entry(i, j);
                    if (coef == 0) {
                        CHECK(e.empty());
                    } else {
                        REQUIRE(e.size() == 1);
                        CHECK(e[0].first == static_cast<std::size_t>(b + d - 1));
                        CHECK(e[0].second == coef);
                    }
                }
        }
}

TEST_CASE("bracket antisymmetry and errors") {
    const Monomial x{{1, 0}}, y{{0, 1}}, one{{0, 0}};
    CHECK(poisson_bracket(x, y) == SparseIntVector{{0, 1}});
    CHECK(poisson_bracket(y, x) == SparseIntVector{{0, -1}});
    CHECK_THROWS_AS(poisson_bracket(one, x), std::invalid_argument);
    CHECK_THROWS_AS(poisson_bracket(x, Monomial{{1, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("Jacobi identity exhaustively to degree 6") {
    std::vector<Monomial> all;
    for (int k = 1; k <= 6; ++k)
        for (const auto& m : enumerate_monomials(1, k)) all.push_back(m);
    std::size_t failures = 0;
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) {
                const auto A = single(a), B = single(b), C = single(c);
                Poly total = bracket_poly(A, bracket_poly(B, C));
                total = sum(total, bracket_poly(B, bracket_poly(C, A)));
                total = sum(total, bracket_poly(C, bracket_poly(A, B)));
                if (!total.empty()) ++failures;
            }
    CHECK(failures == 0);
}

TEST_CASE("sl2 relations for k <= 10") {
    for (int k = 0; k <= 10; ++k) {
        const auto s = sl2_action(k);
        const auto ef = multiply(s.e, s.f), fe = multiply(s.f, s.e);
        const auto he = multiply(s.h, s.e), eh = multiply(s.e, s.h);
        const auto hf = multiply(s.h, s.f), fh = multiply(s.f, s.h);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                CHECK(ef[i][j] - fe[i][j] == s.h[i][j]);
                CHECK(he[i][j] - eh[i][j] == 2 * s.e[i][j]);
                CHECK(hf[i][j] - fh[i][j] == -2 * s.f[i][j]);
            }
        for (int b = 0; b <= k; ++b) {
            const int a = k - b;
            CHECK(s.h[b][b] == a - b);
            if (b >= 1) CHECK(s.e[b - 1][b] == b);
            if (a >= 1) CHECK(s.f[b + 1][b] == a);
        }
    }
}
