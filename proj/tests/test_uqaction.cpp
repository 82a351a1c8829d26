#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qdiv/errors.hpp"
#include "qdiv/qarith.hpp"
#include "qdiv/uqaction.hpp"

using namespace qdiv;
using K = Generator::Kind;

TEST_CASE("generator names and order") {
    auto g = all_generators(3);
    REQUIRE(g.size() == 8);
    CHECK(g[0].name() == "E1");
    CHECK(g[1].name() == "F1");
    CHECK(g[2].name() == "K1");
    CHECK(g[3].name() == "Kinv1");
    CHECK(g[4].name() == "E2");
    CHECK(generator_shift({K::E, 2}, 3) == Grade{0, 1, -1});
    CHECK(generator_shift({K::F, 1}, 3) == Grade{-1, 1, 0});
    CHECK(generator_shift({K::K, 1}, 3) == Grade{0, 0, 0});
    CHECK_THROWS_AS(generator_shift({K::E, 3}, 3), AxisOutOfRange);
}

TEST_CASE("action on monomials, by the formulas") {
    RootSpec sp(3, RootOrder::Odd);
    Truncation t{3, 2};
    // e_i x^b = [b_i + 1] x^(b + e_i - e_{i+1})
    CHECK(apply_generator({K::E, 1}, monomial({1, 2, 0}, sp), sp, t) == monomial({2, 1, 0}, sp).scaled(q_int(2, sp)));
    CHECK(apply_generator({K::E, 1}, monomial({1, 0, 3}, sp), sp, t).is_zero());
    CHECK(apply_generator({K::E, 1}, monomial({2, 1, 0}, sp), sp, t).is_zero());  // [3] = 0
    CHECK(apply_generator({K::F, 2}, monomial({0, 1, 1}, sp), sp, t) == monomial({0, 0, 2}, sp).scaled(q_int(2, sp)));
    CHECK(apply_generator({K::K, 1}, monomial({2, 2, 1}, sp), sp, t) == monomial({2, 2, 1}, sp));
    CHECK(apply_generator({K::K, 2}, monomial({0, 4, 1}, sp), sp, t) == monomial({0, 4, 1}, sp).scaled(sp.q_power(3)));
    CHECK(apply_generator({K::Kinv, 2}, monomial({0, 4, 1}, sp), sp, t) == monomial({0, 4, 1}, sp).scaled(sp.q_power(-3)));
    CHECK_THROWS_AS(apply_generator({K::E, 3}, monomial({0, 4, 1}, sp), sp, t), AxisOutOfRange);
}

TEST_CASE("generator matrices") {
    RootSpec sp(3, RootOrder::Odd);
    ComponentSpace c(Truncation{3, 1}, 1, sp);
    // basis (0,0,1), (0,1,0), (1,0,0)
    REQUIRE(c.basis() == std::vector<MultiIndex>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    const Matrix& e1 = c.matrix({K::E, 1});
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!e1(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 1);
    CHECK(e1(2, 1).is_one());  // x2 -> x1
    const Matrix& k = c.matrix({K::K, 2});
    for (int j = 0; j < 3; ++j) {
        const auto& b = c.basis()[j];
        CHECK(k(j, j) == sp.q_power(b[1] - b[2]));
    }
    CHECK(c.matrix({K::K, 1}) * c.matrix({K::Kinv, 1}) == Matrix::identity(sp.field(), 3));
    CHECK(generator_matrix({K::F, 2}, c) == c.matrix({K::F, 2}));
}

TEST_CASE("defining relations on every component") {
    for (auto order : {RootOrder::Odd, RootOrder::Even})
        for (int m : {1, 2}) {
            RootSpec sp(3, order);
            Truncation t{3, m};
            for (long s = 0; s <= t.top_degree(3); ++s) {
                ComponentSpace c(t, s, sp);
                auto r = check_relations(c);
                CHECK(r.checked > 0);
                CHECK_MESSAGE(r.ok(), sp.describe() << " m=" << m << " s=" << s << " " << (r.ok() ? "" : r.failures[0]));
            }
        }
    RootSpec sp(5, RootOrder::Even);
    ComponentSpace c(Truncation{4, 1}, 7, sp);
    CHECK(check_relations(c).ok());
}

TEST_CASE("A(3,1) components are simple") {
    RootSpec sp(3, RootOrder::Odd);
    const long dims[] = {1, 3, 6, 7, 6, 3, 1};
    for (long s = 0; s <= 6; ++s) {
        ComponentSpace c(Truncation{3, 1}, s, sp);
        CHECK(c.dim() == dims[s]);
        auto cert = simplicity_certificate(c.module(), GradedSubspace::whole(c.module()));
        CHECK(cert.verdict == SimplicityVerdict::Simple);
        // x^(s) for s <= 2, else the top-left highest weight vector, generates and is killed by every e_i
        MultiIndex hw{static_cast<int>(std::min<long>(s, 2)), static_cast<int>(std::min<long>(std::max<long>(s - 2, 0), 2)),
                      static_cast<int>(std::max<long>(s - 4, 0))};
        CHECK(monomial_closure({hw}, c).dim() == c.dim());
        for (int i = 1; i < 3; ++i) CHECK(apply_generator({K::E, i}, monomial(hw, sp), sp, Truncation{3, 1}).is_zero());
    }
}

TEST_CASE("closures and the socle oracle") {
    RootSpec sp(3, RootOrder::Odd);
    ComponentSpace c(Truncation{3, 2}, 7, sp);
    CHECK(submodule_closure({}, c).rank() == 0);
    CHECK(monomial_closure({{5, 2, 0}}, c).dim() == 6);
    const GradedSubspace soc = socle_oracle(c);
    CHECK(soc.dim() == 18);
    CHECK(is_closed(c.module(), soc));
    Restriction r = restrict_to(c.module(), soc);
    CHECK(radical(r.module).dim() == 0);
    const GradedSubspace rad = radical_oracle(c);
    CHECK(rad.dim() < c.dim());
    CHECK(soc.contains(rad));  // Loewy length 2
    auto cert = simplicity_certificate(c.module(), GradedSubspace::whole(c.module()));
    CHECK(cert.verdict == SimplicityVerdict::NotSimple);
    // dense and graded closures agree on a monomial
    ModVector v = monomial({5, 2, 0}, sp);
    RowEchelon d = submodule_closure({v}, c);
    GradedSubspace g = monomial_closure({{5, 2, 0}}, c);
    CHECK(d.rank() == g.dim());
    for (const auto& row : g.dense_rows(c.module())) CHECK(d.contains(row));
    v.add({2, 5, 0}, sp.q_power(1));
    CHECK(c.monomials_of(c.monomial_span({{5, 2, 0}, {2, 2, 3}})) == std::vector<MultiIndex>{{2, 2, 3}, {5, 2, 0}});
    CHECK(c.vector(c.coordinates(v)) == v);
    CHECK_THROWS_AS(c.coordinates(monomial({7, 0, 0}, sp)), InvalidArgument);
}

TEST_CASE("m = 1 components: socle is everything") {
    RootSpec sp(5, RootOrder::Odd);
    for (long s : {0L, 3L, 6L, 12L}) {
        ComponentSpace c(Truncation{3, 1}, s, sp);
        CHECK(socle_oracle(c).dim() == c.dim());
        CHECK(radical_oracle(c).dim() == 0);
    }
}
