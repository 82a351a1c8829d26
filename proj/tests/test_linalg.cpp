#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdiv/linalg.hpp"

using namespace qdiv;

namespace {

const CyclotomicField& F = CyclotomicField::get(6);

Matrix random_matrix(int r, int c, std::mt19937& rng, int zero_bias = 0) {
    std::uniform_int_distribution<int> d(-3, 3 + zero_bias);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            int a = d(rng), b = d(rng);
            m(i, j) = a > 3 ? F.zero() : F.from_int(a) + F.zeta_power(b);
        }
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix I = Matrix::identity(F, 3);
    CHECK(I.trace() == F.from_int(3));
    std::mt19937 rng(1);
    Matrix a = random_matrix(3, 3, rng), b = random_matrix(3, 3, rng);
    CHECK(a * I == a);
    CHECK((a + b) - b == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK((F.from_int(2) * a) == a + a);
    Vec x{F.one(), F.zeta_power(1), F.zero()};
    Vec y = a.apply(x);
    for (int i = 0; i < 3; ++i) CHECK(y[i] == a(i, 0) + a(i, 1) * F.zeta_power(1));
    CHECK(Matrix(2, 2).is_zero());
    CHECK(is_zero(Vec{F.zero(), CycScalar()}));
}

TEST_CASE("echelon form is canonical") {
    std::mt19937 rng(2);
    Matrix m = random_matrix(4, 6, rng);
    RowEchelon e1(6), e2(6);
    for (int i = 0; i < 4; ++i) e1.insert(m.row(i));
    for (int i = 3; i >= 0; --i) e2.insert(m.row(i));
    e2.insert(m.row(0));
    CHECK(e1 == e2);
    CHECK(e1.rank() == 4);
    for (int k = 0; k < e1.rank(); ++k) {
        CHECK(e1.rows()[k][e1.pivots()[k]].is_one());
        for (int t = 0; t < e1.rank(); ++t)
            if (t != k) CHECK(e1.rows()[t][e1.pivots()[k]].is_zero());
    }
    CHECK(std::is_sorted(e1.pivots().begin(), e1.pivots().end()));
    CHECK(e1.free_columns().size() == 2);
    // coordinates reproduce the vector
    Vec v(6);
    for (int j = 0; j < 6; ++j) v[j] = m(0, j) * F.from_int(2) - m(2, j) * F.zeta_power(1);
    CHECK(e1.contains(v));
    auto c = e1.coordinates(v);
    REQUIRE(c.has_value());
    Vec back(6, F.zero());
    for (int k = 0; k < e1.rank(); ++k)
        for (int j = 0; j < 6; ++j) back[j] += (*c)[k] * e1.rows()[k][j];
    for (int j = 0; j < 6; ++j) CHECK(back[j] == v[j]);
    CHECK(is_zero(e1.reduce(v)));
}

TEST_CASE("rank, kernels, inverse") {
    std::mt19937 rng(4);
    for (int t = 0; t < 10; ++t) {
        Matrix u = random_matrix(5, 2, rng), v = random_matrix(2, 6, rng);
        Matrix p = u * v;  // rank <= 2
        const int r = rank(p);
        CHECK(r <= 2);
        auto ker = kernel(p, F);
        CHECK(static_cast<int>(ker.size()) == 6 - r);
        for (const auto& k : ker) CHECK(is_zero(p.apply(k)));
        auto lk = left_kernel(p, F);
        CHECK(static_cast<int>(lk.size()) == 5 - r);
        for (const auto& k : lk) CHECK(is_zero(p.transpose().apply(k)));
        CHECK(row_space(p).rank() == r);
    }
    Matrix a = random_matrix(4, 4, rng);
    auto inv = inverse(a, F);
    if (rank(a) == 4) {
        REQUIRE(inv.has_value());
        CHECK(a * *inv == Matrix::identity(F, 4));
        CHECK(*inv * a == Matrix::identity(F, 4));
    }
    Matrix s(2, 2);
    s(0, 0) = F.one();
    s(0, 1) = F.zeta_power(1);
    s(1, 0) = F.from_int(2);
    s(1, 1) = F.from_int(2) * F.zeta_power(1);
    CHECK_FALSE(inverse(s, F).has_value());
    CHECK(rank(s) == 1);
}
