#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rih/perversity.hpp"

using namespace rih;

namespace {

oracle::BruteForce::Mask to_mask(const Chain& c) {
    oracle::BruteForce::Mask m(c.cells.size());
    for (auto i : c.support()) m[i] = 1;
    return m;
}

Chain random_sparse(std::mt19937& rng, const SimplicialComplex& x, int k) {
    Chain c = Chain::zero(x, k);
    const unsigned mod = 1 + rng() % 4;
    for (std::size_t i = 0; i < x.count(k); ++i)
        if (rng() % mod == 0) c.cells.set(i);
    return c;
}

ConstraintContext context(const Space& sp, PerversityPair pp, LooseMode mode = LooseMode::primary) {
    ConstraintContext cx;
    cx.space = &sp;
    cx.pp = std::move(pp);
    cx.mode = mode;
    return cx;
}

}  // namespace

TEST_CASE("default pair", "[perversity]") {
    auto pp = default_pair(4);
    CHECK(pp.p.values == std::vector<int>{0, 0, 0, 1, 1});
    CHECK(pp.q.values == std::vector<int>{0, 0, 1, 1, 2});
    for (int n = 0; n <= 8; ++n) CHECK(validate_pair(default_pair(n)).ok);
}

TEST_CASE("pair validation", "[perversity]") {
    PerversityPair bad{{{0, 0, 2}}, {{0, 1, 2}}};
    auto v = validate_pair(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.violations.size() == 1);

    PerversityPair wide{{{0, 0, 0}}, {{0, 1, 2}}};
    CHECK_FALSE(validate_pair(wide).ok);  // q_2 - p_2 = 2

    PerversityPair start{{{1, 1}}, {{0, 1}}};
    CHECK_FALSE(validate_pair(start).ok);

    CHECK_FALSE(validate_pair(PerversityPair{}).ok);
    CHECK_THROWS_AS(validate_pair(PerversityPair{{{0}}, {{0, 0}}}), Error);

    PerversityPair top{{{0, 0, 1}}, {{0, 1, 2}}};
    CHECK(validate_pair(top).ok);
}

TEST_CASE("context rejects a pair of the wrong length", "[perversity]") {
    auto ws = fx::load(corpus::pinched_sphere());
    auto cx = context(ws.space("pinched"), default_pair(3));
    try {
        compile_constraints(cx, 1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidPair);
    }
    auto ok = context(ws.space("pinched"), default_pair(2));
    CHECK_THROWS_AS(compile_constraints(ok, 3), Error);
}

TEST_CASE("allowability on the pinched sphere", "[perversity]") {
    auto ws = fx::load(corpus::pinched_sphere());
    const auto& sp = ws.space("pinched");
    auto cx = context(sp, default_pair(2));
    // points: the cone points have codim 2 and p_2 = 0, so they are not allowed
    CHECK(is_allowable(cx, Chain::of_names(sp.x, {{"c0"}})));
    CHECK_FALSE(is_allowable(cx, Chain::of_names(sp.x, {{"N"}})));
    // an edge into a cone point touches it
    CHECK_FALSE(is_allowable(cx, Chain::of_names(sp.x, {{"N", "c0"}})));
    CHECK(is_allowable(cx, Chain::of_names(sp.x, {{"c0", "c1"}})));
    // the fundamental class is allowable, a single triangle is not
    CHECK(is_allowable(cx, fx::cycle(ws, "fund")));
    CHECK_FALSE(is_allowable(cx, Chain::of_names(sp.x, {{"N", "c0", "c1"}})));
    // the set-based check agrees, including on a point far from the strata
    CHECK(satisfies_conditions(cx, Chain::of_names(sp.x, {{"c0"}})));
    CHECK_FALSE(satisfies_conditions(cx, Chain::of_names(sp.x, {{"N"}})));
}

TEST_CASE("compiled constraints match the set-based conditions", "[perversity]") {
    std::mt19937 rng(21);
    for (auto& e : corpus::all()) {
        auto ws = fx::load(e);
        for (auto& [name, sp] : ws.spaces) {
            for (auto mode : {LooseMode::primary, LooseMode::literal}) {
                auto cx = context(*sp, default_pair(sp->n()), mode);
                for (int k = 0; k <= sp->x.dim(); ++k) {
                    auto m = compile_constraints(cx, k);
                    for (int trial = 0; trial < 40; ++trial) {
                        Chain c = random_sparse(rng, sp->x, k);
                        bool lin = (m * c.cells).none();
                        INFO(e.file << " " << name << " k=" << k << " " << chain_label(sp->x, c));
                        if (mode == LooseMode::primary) REQUIRE(lin == satisfies_conditions(cx, c));
                        // the literal rows are a linear strengthening
                        else if (lin) REQUIRE(satisfies_conditions(cx, c));
                    }
                }
            }
        }
    }
}

TEST_CASE("compiled constraints match the brute-force conditions", "[perversity]") {
    std::mt19937 rng(22);
    for (auto& e : corpus::all()) {
        auto ws = fx::load(e);
        for (auto& [name, sp] : ws.spaces) {
            oracle::BruteForce bf(*sp);
            auto pp = default_pair(sp->n());
            auto cx = context(*sp, pp);
            for (int k = 0; k <= sp->x.dim(); ++k)
                for (int trial = 0; trial < 20; ++trial) {
                    Chain c = random_sparse(rng, sp->x, k);
                    REQUIRE(is_allowable(cx, c) == bf.allowable(k, to_mask(c), pp.p.values, pp.q.values));
                }
        }
    }
}

TEST_CASE("raising the perversity only admits more chains", "[perversity]") {
    auto ws = fx::load(corpus::pinched_sphere());
    const auto& sp = ws.space("pinched");
    PerversityPair lo = default_pair(2);
    PerversityPair hi{{{0, 0, 1}}, {{0, 1, 2}}};
    for (int k = 0; k <= 2; ++k) {
        auto small = gf2::nullspace(compile_constraints(context(sp, lo), k));
        auto big = compile_constraints(context(sp, hi), k);
        for (auto& v : small.basis) CHECK((big * v).none());
        CHECK(small.dim() <= gf2::nullspace(big).dim());
    }
    // the top pair lets boundaries pass through the cone points
    CHECK_FALSE(is_allowable(context(sp, hi), Chain::of_names(sp.x, {{"N"}})));
    CHECK(is_allowable(context(sp, hi), Chain::of_names(sp.x, {{"N", "c0", "c1"}})));
    CHECK(is_allowable(context(sp, hi), Chain::of_names(sp.x, {{"N", "c0"}, {"N", "c1"}})));
}

TEST_CASE("with q = p + 1 in every even codimension the pairing rows add nothing", "[perversity]") {
    // pinched sphere: singular points have codimension 2 only
    auto ws = fx::load(corpus::pinched_sphere());
    const auto& sp = ws.space("pinched");
    oracle::BruteForce bf(sp);
    auto pp = default_pair(2);
    std::vector<int> loose(pp.q.values.size(), 100);
    for (int k = 0; k <= 2; ++k) {
        const std::size_t m = bf.count(k);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            oracle::BruteForce::Mask c(m);
            for (std::size_t j = 0; j < m; ++j) c[j] = (bits >> j) & 1;
            REQUIRE(bf.allowable(k, c, pp.p.values, pp.q.values) == bf.allowable(k, c, pp.p.values, loose));
        }
    }
}
