#include "doctest.h"

#include "gfc/complex.hpp"
#include "gfc/errors.hpp"
#include "gfc/parallel.hpp"
#include "gfc/serialize.hpp"

using namespace gfc;

namespace {

bool squares_to_zero(const WeightSlice& s) {
    for (std::size_t d = 0; d + 1 < s.coboundary_count(); ++d)
        if (!(s.coboundary(static_cast<int>(d + 1)) * s.coboundary(static_cast<int>(d))).is_zero()) return false;
    return true;
}

std::string dims(const WeightSlice& s) { return degree_map_text(slice_degree_dims(s)); }
std::string betti(const WeightSlice& s) { return degree_map_text(cohomology_dims(s)); }

}  // namespace

TEST_CASE("profile enumeration") {
    // Solutions of the weight equation; only those carrying invariants survive.
    std::vector<std::string> d2, d2_nonzero;
    for (const auto& p : enumerate_profiles(AlgebraVariant::Ham0, 10, 2)) {
        d2.push_back(p.symbol());
        if (invariant_dim(p) > 0) d2_nonzero.push_back(p.symbol());
    }
    CHECK(d2 == std::vector<std::string>{"3 11", "4 10", "5 9", "6 8", "7^2"});
    CHECK(d2_nonzero == std::vector<std::string>{"7^2"});
    std::vector<std::string> d6;
    for (const auto& p : enumerate_profiles(AlgebraVariant::Ham0, 10, 6))
        if (invariant_dim(p) > 0) d6.push_back(p.symbol());
    CHECK(d6 == std::vector<std::string>{"3^4 5^2", "3^3 4^2 5", "3^2 4^4"});
    for (const auto& p : enumerate_profiles(AlgebraVariant::Ham, 4)) {
        CHECK(p.weight() == 4);
        CHECK(p.multiplicity(1) <= 2);
        CHECK(p.multiplicity(2) == 0);
    }
}

TEST_CASE("cochain dimensions") {
    CHECK(dims(build_slice(AlgebraVariant::Ham0, 8)) == "3:4 4:5 5:1");
    CHECK(dims(build_slice(AlgebraVariant::Ham0, 10)) == "2:1 3:3 4:9 5:12 6:4");
    CHECK(dims(build_slice(AlgebraVariant::Ham, 8)) == "3:5 4:13 5:17 6:18 7:14 8:4");
    CHECK(dims(build_slice(AlgebraVariant::Ham, -2)) == "2:1");
    for (int w : {1, 3, 5, 7, 9}) {
        CHECK(dims(build_slice(AlgebraVariant::Ham0, w)).empty());
        CHECK(dims(build_slice(AlgebraVariant::Ham, w)).empty());
    }
    CHECK(degree_map_text(slice_dimensions(AlgebraVariant::Ham0, 10)) == "2:1 3:3 4:9 5:12 6:4");
}

TEST_CASE("coboundary squares to zero and matches direct expansion") {
    for (int w = 0; w <= 12; w += 2) {
        const auto s = build_slice(AlgebraVariant::Ham0, w);
        CHECK(squares_to_zero(s));
        for (std::size_t d = 0; d < s.coboundary_count(); ++d) CHECK(verify_coboundary_expansion(s, static_cast<int>(d)));
    }
    for (int w = -2; w <= 8; w += 2) {
        const auto s = build_slice(AlgebraVariant::Ham, w);
        CHECK(squares_to_zero(s));
        for (std::size_t d = 0; d < s.coboundary_count(); ++d) CHECK(verify_coboundary_expansion(s, static_cast<int>(d)));
    }
}

TEST_CASE("rank-nullity decomposition of each degree") {
    for (auto [variant, w] : {std::pair{AlgebraVariant::Ham0, 10}, std::pair{AlgebraVariant::Ham, 8}}) {
        const auto s = build_slice(variant, w);
        const auto h = cohomology_dims(s);
        long chi = 0;
        for (int d = 0; d <= s.max_degree(); ++d) {
            const std::size_t out = static_cast<std::size_t>(d) < s.coboundary_count() ? rank(s.coboundary(d)) : 0;
            const std::size_t in = d > 0 ? rank(s.coboundary(d - 1)) : 0;
            CHECK(s.dim(d) == out + in + h.at(d));
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(h.at(d));
        }
        CHECK(chi == euler_characteristic(s));
        CHECK(chi == -1);
    }
}

TEST_CASE("rank certificates") {
    const auto leaf = build_slice(AlgebraVariant::Ham0, 10);
    CHECK(leaf.coboundary(4).rows() == 12);
    CHECK(leaf.coboundary(4).cols() == 9);
    CHECK(rank(leaf.coboundary(4)) == 7);
    CHECK(rank(leaf.coboundary(5)) == 4);
    CHECK(kernel_basis(leaf.coboundary(5)).size() == 8);
    const auto full = build_slice(AlgebraVariant::Ham, 8);
    CHECK(rank(full.coboundary(6)) == 9);
    CHECK(rank(full.coboundary(7)) == 4);
    const auto w4 = build_slice(AlgebraVariant::Ham0, 4);
    CHECK(rank(w4.coboundary(3)) == 1);
}

TEST_CASE("cohomology of both complexes") {
    CHECK(betti(build_slice(AlgebraVariant::Ham0, 0)) == "0:1");
    CHECK(betti(build_slice(AlgebraVariant::Ham0, 2)) == "2:1");
    CHECK(betti(build_slice(AlgebraVariant::Ham0, 8)).empty());
    CHECK(betti(build_slice(AlgebraVariant::Ham0, 10)) == "5:1");
    CHECK(betti(build_slice(AlgebraVariant::Ham, -2)) == "2:1");
    CHECK(betti(build_slice(AlgebraVariant::Ham, 0)) == "0:1 4:1");
    CHECK(betti(build_slice(AlgebraVariant::Ham, 8)) == "7:1");
}

TEST_CASE("keeping sp(2) slots gives a different complex") {
    // Negative control: without the relative projection the complex is still
    // a complex, but it is no longer the one whose dimensions we reproduce.
    SliceOptions ablation;
    ablation.include_sp2_slots = true;
    const auto s = build_slice(AlgebraVariant::Ham, 8, ablation);
    CHECK(squares_to_zero(s));
    CHECK(dims(s) != "3:5 4:13 5:17 6:18 7:14 8:4");
    CHECK(betti(build_slice(AlgebraVariant::Ham, 0, ablation)) != "0:1 4:1");
    bool has_sp2_slot = false;
    for (const auto& block : s.blocks())
        for (const auto& basis : block.profiles) has_sp2_slot = has_sp2_slot || basis.profile.multiplicity(2) > 0;
    CHECK(has_sp2_slot);
}

TEST_CASE("deterministic across thread counts") {
    set_worker_count(1);
    const auto one = build_slice(AlgebraVariant::Ham, 8);
    set_worker_count(4);
    const auto four = build_slice(AlgebraVariant::Ham, 8);
    set_worker_count(0);
    REQUIRE(one.coboundary_count() == four.coboundary_count());
    for (std::size_t d = 0; d < one.coboundary_count(); ++d)
        CHECK(one.coboundary(static_cast<int>(d)) == four.coboundary(static_cast<int>(d)));
    CHECK(slice_json(one).dump() == slice_json(four).dump());
}

TEST_CASE("cochain operations") {
    const auto s = build_slice(AlgebraVariant::Ham0, 4);
    Cochain c3{AlgebraVariant::Ham0, 4, 3, {Rational(1)}};
    CHECK_FALSE(is_cocycle(s, c3));
    Cochain c4{AlgebraVariant::Ham0, 4, 4, {Rational(1)}};
    CHECK(is_cocycle(s, c4));
    CHECK(is_coboundary(s, c4));
    Cochain bad{AlgebraVariant::Ham0, 4, 4, {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(is_cocycle(s, bad), std::invalid_argument);

    // A functional that is not invariant cannot be expressed in the basis.
    const auto w10 = build_slice(AlgebraVariant::Ham0, 10);
    const auto first = w10.block(2).profiles.at(0).support.front();
    CHECK_THROWS_AS(express_in_basis(w10, 2, [&](const WedgeMonomial& w) { return Rational(w == first ? 1 : 0); }),
                    InconsistencyError);
}

TEST_CASE("budget and degree cap") {
    SliceOptions tight;
    tight.budget_dim = 10;
    CHECK_THROWS_AS(build_slice(AlgebraVariant::Ham0, 10, tight), BudgetExceeded);
    SliceOptions capped;
    capped.max_degree = 4;
    const auto s = build_slice(AlgebraVariant::Ham0, 10, capped);
    CHECK(s.max_degree() == 4);
    CHECK_FALSE(s.complete());
    const auto h = cohomology_dims(s);
    CHECK(h.count(4) == 0);
    CHECK(h.at(3) == 0);
}

TEST_CASE("slice JSON layout") {
    const auto j = slice_json(build_slice(AlgebraVariant::Ham0, 4));
    CHECK(j["variant"] == "ham0");
    CHECK(j["weight"] == 4);
    CHECK(j["degrees"][3]["dim"] == 1);
    CHECK(j["degrees"][3]["profiles"][0]["slots"] == Json::array({3, 3, 4}));
    CHECK(j["coboundaries"][3]["from_degree"] == 3);
    CHECK(j["coboundaries"][3]["entries"][0][2].get<std::string>().find('/') != std::string::npos);
}
