#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "rih/gf2.hpp"

using namespace rih;
using namespace rih::gf2;

namespace {

std::vector<std::vector<int>> random_dense(std::mt19937& rng, std::size_t r, std::size_t c, double density) {
    std::bernoulli_distribution bit(density);
    std::vector<std::vector<int>> a(r, std::vector<int>(c));
    for (auto& row : a)
        for (auto& v : row) v = bit(rng);
    return a;
}

}  // namespace

TEST_CASE("bit vectors", "[gf2]") {
    BitVector v = BitVector::from_indices(130, {0, 64, 129});
    CHECK(v.count() == 3);
    CHECK(v.get(64));
    CHECK_FALSE(v.get(63));
    CHECK(v.lowest() == 0);
    CHECK(v.highest() == 129);
    BitVector w = BitVector::from_indices(130, {64, 100});
    CHECK((v ^ w).indices() == std::vector<std::size_t>{0, 100, 129});
    CHECK(v.dot(w));
    CHECK_FALSE(w.subset_of(v));
    CHECK_THROWS_AS(v ^= BitVector(3), Error);
}

TEST_CASE("rank of small matrices", "[gf2]") {
    CHECK(rank(Gf2Matrix::identity(5)) == 5);
    CHECK(rank(Gf2Matrix(3, 4)) == 0);
    // rows 1+2 = row 3
    auto m = Gf2Matrix::from_dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    CHECK(nullspace(m).dim() == 1);
    CHECK(nullspace(m).basis[0].indices() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rank agrees with a dense elimination", "[gf2]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 40, c = 1 + rng() % 90;
        auto a = random_dense(rng, r, c, trial % 2 ? 0.5 : 0.08);
        auto m = Gf2Matrix::from_dense(a);
        std::size_t rk = rank(m);
        REQUIRE(rk == oracle::dense_rank(a));
        REQUIRE(rank(m.transpose()) == rk);
        // rank-nullity
        Subspace ns = nullspace(m);
        REQUIRE(rk + ns.dim() == c);
        for (auto& v : ns.basis) REQUIRE((m * v).none());
    }
}

TEST_CASE("solve finds a solution exactly when one exists", "[gf2]") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + rng() % 20, c = 1 + rng() % 20;
        auto a = random_dense(rng, r, c, 0.3);
        auto m = Gf2Matrix::from_dense(a);
        BitVector x(c);
        for (std::size_t j = 0; j < c; ++j)
            if (rng() & 1) x.set(j);
        BitVector b = m * x;
        auto got = solve(m, b);
        REQUIRE(got.has_value());
        REQUIRE(m * *got == b);

        // a right-hand side outside the column space has no solution
        BitVector other(r);
        other.set(rng() % r);
        auto aug = a;
        for (std::size_t i = 0; i < r; ++i) aug[i].push_back(other.get(i));
        bool consistent = oracle::dense_rank(aug) == oracle::dense_rank(a);
        REQUIRE(solve(m, other).has_value() == consistent);
    }
    CHECK_THROWS_AS(solve(Gf2Matrix(2, 2), BitVector(3)), Error);
}

TEST_CASE("quotient dimension", "[gf2]") {
    Subspace v = span_of(4, {BitVector::from_indices(4, {0}), BitVector::from_indices(4, {1}),
                             BitVector::from_indices(4, {0, 1})});
    CHECK(v.dim() == 2);
    Subspace w = span_of(4, {BitVector::from_indices(4, {0, 1})});
    CHECK(quotient_dim(v, w) == 1);
    Subspace outside = span_of(4, {BitVector::from_indices(4, {2})});
    CHECK_THROWS_AS(quotient_dim(v, outside), Error);
    try {
        quotient_dim(v, outside);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotContained);
    }
    CHECK_THROWS_AS(quotient_dim(v, Subspace{5, {}}), Error);
}

TEST_CASE("matrix products and sums", "[gf2]") {
    auto a = Gf2Matrix::from_dense({{1, 0, 1}, {0, 1, 1}});
    auto b = Gf2Matrix::from_dense({{1, 1}, {0, 1}, {1, 0}});
    CHECK(a * b == Gf2Matrix::from_dense({{0, 1}, {1, 1}}));
    CHECK(a + a == Gf2Matrix(2, 3));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK_THROWS_AS(a * a, Error);
    CHECK_THROWS_AS(Gf2Matrix::from_dense({{1, 0}, {1}}), Error);
}
