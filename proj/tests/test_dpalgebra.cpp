#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qdiv/dpalgebra.hpp"
#include "qdiv/errors.hpp"
#include "qdiv/qarith.hpp"

using namespace qdiv;

namespace {

MultiIndex random_index(int n, int hi, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, hi);
    MultiIndex a(n);
    for (auto& x : a) x = d(rng);
    return a;
}

ModVector random_vector(int n, int hi, const RootSpec& sp, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    ModVector v;
    for (int t = 0; t < 4; ++t) v.add(random_index(n, hi, rng), sp.integer(c(rng)) + sp.q_power(c(rng)));
    return v;
}

}  // namespace

TEST_CASE("star and theta") {
    CHECK(star({1, 0}, {0, 1}) == 0);
    CHECK(star({0, 1}, {1, 0}) == 1);
    CHECK(star({1, 1, 1}, {1, 1, 1}) == 3);
    CHECK_THROWS_AS(star({1, 0}, {1, 0, 0}), LengthMismatch);
    RootSpec sp(3, RootOrder::Odd);
    CHECK(theta({0, 1}, {1, 0}, sp) == sp.q_power(1));
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto a = random_index(3, 4, rng), b = random_index(3, 4, rng), c = random_index(3, 4, rng);
        CHECK(theta(a, a, sp).is_one());
        CHECK((theta(a, b, sp) * theta(b, a, sp)).is_one());
        MultiIndex bc(3);
        for (int i = 0; i < 3; ++i) bc[i] = b[i] + c[i];
        CHECK(theta(a, bc, sp) == theta(a, b, sp) * theta(a, c, sp));
    }
}

TEST_CASE("multiplication") {
    for (auto order : {RootOrder::Odd, RootOrder::Even}) {
        RootSpec sp(3, order);
        const Truncation whole{3, 0};
        std::mt19937 rng(11);
        CHECK(multiply(MultiIndex{0, 0, 0}, MultiIndex{2, 1, 4}, sp, whole) == monomial({2, 1, 4}, sp));
        // x^(1) x^(2) = [3 1] x^(3) = 0 at l = 3
        CHECK(multiply(MultiIndex{1}, MultiIndex{2}, sp, Truncation{1, 0}).is_zero());
        for (int t = 0; t < 40; ++t) {
            auto a = random_index(3, 3, rng), b = random_index(3, 3, rng), c = random_index(3, 3, rng);
            CHECK(multiply(a, b, sp, whole) == multiply(b, a, sp, whole).scaled(theta(a, b, sp)));
            ModVector left = multiply(multiply(a, b, sp, whole), monomial(c, sp), sp, whole);
            ModVector right = multiply(monomial(a, sp), multiply(b, c, sp, whole), sp, whole);
            CHECK(left == right);
        }
        // pairs with |a| + |b| <= 3l in two variables
        for (int a1 = 0; a1 <= 9; ++a1)
            for (int a2 = 0; a1 + a2 <= 9; ++a2)
                for (int b1 = 0; a1 + a2 + b1 <= 9; ++b1)
                    for (int b2 = 0; a1 + a2 + b1 + b2 <= 9; ++b2) {
                        MultiIndex a{a1, a2}, b{b1, b2};
                        CHECK(multiply(a, b, sp, Truncation{2, 0}) ==
                              multiply(b, a, sp, Truncation{2, 0}).scaled(theta(a, b, sp)));
                    }
    }
    // x_i^(l) is central for the odd order
    RootSpec sp(3, RootOrder::Odd);
    std::mt19937 rng(5);
    for (int i = 1; i <= 3; ++i)
        for (int t = 0; t < 15; ++t) {
            auto b = random_index(3, 7, rng);
            MultiIndex li = unit_index(3, i);
            for (auto& x : li) x *= 3;
            CHECK(multiply(li, b, sp, Truncation{3, 0}) == multiply(b, li, sp, Truncation{3, 0}));
        }
}

TEST_CASE("truncated products vanish past the cap") {
    RootSpec sp(3, RootOrder::Odd);
    Truncation t{2, 1};
    CHECK(multiply(MultiIndex{2, 0}, MultiIndex{1, 0}, sp, t).is_zero());
    CHECK(multiply(MultiIndex{1, 0}, MultiIndex{0, 2}, sp, t) == monomial({1, 2}, sp));
}

TEST_CASE("sigma and q-derivatives") {
    RootSpec sp(3, RootOrder::Odd);
    std::mt19937 rng(9);
    CHECK(partial_apply(1, monomial({1, 0, 0}, sp), sp, 3) == monomial({0, 0, 0}, sp));
    CHECK(partial_apply(2, monomial({1, 0, 4}, sp), sp, 3).is_zero());
    CHECK(partial_apply(3, monomial({1, 2, 1}, sp), sp, 3) == monomial({1, 2, 0}, sp).scaled(sp.q_power(-3)));
    CHECK(sigma_apply(2, monomial({1, 3, 0}, sp), sp, 3) == monomial({1, 3, 0}, sp));
    CHECK(sigma_apply(1, monomial({1, 3, 0}, sp), sp, 3) == monomial({1, 3, 0}, sp).scaled(sp.q_power(1)));
    CHECK_THROWS_AS(sigma_apply(4, monomial({1, 3, 0}, sp), sp, 3), AxisOutOfRange);
    CHECK_THROWS_AS(partial_apply(0, monomial({1, 3, 0}, sp), sp, 3), AxisOutOfRange);
    for (int t = 0; t < 20; ++t) {
        ModVector v = random_vector(3, 5, sp, rng);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                CHECK(sigma_apply(i, sigma_apply(j, v, sp, 3), sp, 3) == sigma_apply(j, sigma_apply(i, v, sp, 3), sp, 3));
                CHECK(partial_apply(i, partial_apply(j, v, sp, 3), sp, 3) ==
                      partial_apply(j, partial_apply(i, v, sp, 3), sp, 3)
                          .scaled(theta(unit_index(3, i), unit_index(3, j), sp)));
            }
    }
}

TEST_CASE("component bases") {
    RootSpec sp(3, RootOrder::Odd);
    CHECK(component_basis(0, Truncation{3, 1}, sp) == std::vector<MultiIndex>{{0, 0, 0}});
    CHECK(component_basis(6, Truncation{3, 1}, sp) == std::vector<MultiIndex>{{2, 2, 2}});
    CHECK(component_basis(7, Truncation{3, 2}, sp).size() == 27);
    CHECK_THROWS_AS(component_basis(7, Truncation{3, 1}, sp), DegreeOutOfRange);
    CHECK_THROWS_AS(component_basis(-1, Truncation{3, 1}, sp), DegreeOutOfRange);
    CHECK(component_basis(4, Truncation{3, 0}, sp).size() == 15);
    for (int ell : {3, 5}) {
        RootSpec s2(ell, RootOrder::Odd);
        for (int n : {2, 3, 4})
            for (int m : {1, 2}) {
                Truncation t{n, m};
                for (long s = 0; s <= t.top_degree(ell); ++s) {
                    auto b = component_basis(s, t, s2);
                    CHECK(static_cast<long>(b.size()) == oracle::count_tuples(n, s, m * ell - 1));
                    CHECK(static_cast<long>(b.size()) == dim_by_gaussian(n, m * ell, s));
                    CHECK(std::is_sorted(b.begin(), b.end()));
                    for (const auto& a : b) CHECK((weight(a) == s && t.admits(a, ell)));
                }
            }
    }
}

TEST_CASE("multi-index helpers") {
    CHECK(unit_index(3, 2) == MultiIndex{0, 1, 0});
    CHECK_THROWS_AS(unit_index(3, 0), AxisOutOfRange);
    CHECK_THROWS_AS(unit_index(3, 4), AxisOutOfRange);
    CHECK(to_string(MultiIndex{5, 2, 0}) == "(5,2,0)");
    CHECK(weight({5, 2, 0}) == 7);
    Truncation t{3, 2};
    CHECK(t.cap(3) == 5);
    CHECK(t.top_degree(3) == 15);
    CHECK(t.admits({5, 0, 5}, 3));
    CHECK_FALSE(t.admits({6, 0, 0}, 3));
}

TEST_CASE("linear combinations prune zeros") {
    RootSpec sp(5, RootOrder::Odd);
    ModVector v;
    v.add({1, 0}, sp.one());
    v.add({1, 0}, -sp.one());
    CHECK(v.is_zero());
    v.add({0, 1}, sp.q_power(2));
    CHECK(v.size() == 1);
    CHECK(v.coeff({0, 1}) == sp.q_power(2));
    CHECK(v.coeff({1, 1}).is_zero());
    ModVector w = v;
    w -= v;
    CHECK(w.is_zero());
}
