#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rih/scomplex.hpp"

using namespace rih;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::from_maximal({{"a", "b", "c"}}); }

SimplicialComplex circle4() {
    return SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

SimplicialComplex octahedron() {
    std::vector<std::vector<std::string>> f;
    for (auto z : {"n", "s"})
        for (auto [u, v] : std::vector<std::pair<std::string, std::string>>{{"x", "y"}, {"y", "X"}, {"X", "Y"}, {"Y", "x"}})
            f.push_back({z, u, v});
    return SimplicialComplex::from_maximal(f);
}

}  // namespace

TEST_CASE("downward closure from maximal simplices", "[scomplex]") {
    auto x = triangle();
    CHECK(x.dim() == 2);
    CHECK(x.count(0) == 3);
    CHECK(x.count(1) == 3);
    CHECK(x.count(2) == 1);
    CHECK(x.label(1, 0) == "a,b");

    std::vector<std::string> warnings;
    auto y = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "a"}, {"a"}}, &warnings);
    CHECK(y.count(1) == 1);
    CHECK(warnings.size() == 2);

    CHECK_THROWS_AS(SimplicialComplex::from_maximal({}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{"a", "a"}}), Error);
}

TEST_CASE("vertex order is natural", "[scomplex]") {
    auto x = SimplicialComplex::from_maximal({{"v10", "v2"}, {"v2", "v1"}});
    CHECK(x.vertex_names() == std::vector<std::string>{"v1", "v2", "v10"});
}

TEST_CASE("lookup errors", "[scomplex]") {
    auto x = circle4();
    try {
        x.cell_of({"a", "z"});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownVertex);
    }
    try {
        x.cell_of({"a", "c"});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASimplex);
    }
}

TEST_CASE("links", "[scomplex]") {
    auto oct = octahedron();
    auto lk = link(oct, oct.simplex_of({"n"}));
    CHECK(lk.dim() == 1);
    CHECK(lk.count(0) == 4);
    CHECK(lk.count(1) == 4);
    CHECK(oracle::betti(lk) == std::vector<std::size_t>{1, 1});

    auto le = link(oct, oct.simplex_of({"n", "x"}));
    CHECK(le.dim() == 0);
    CHECK(le.count(0) == 2);

    auto top = link(oct, oct.simplex_of({"n", "x", "y"}));
    CHECK(top.empty());
}

TEST_CASE("euler characteristic", "[scomplex]") {
    CHECK(euler_char(triangle()) == 1);
    CHECK(euler_char(circle4()) == 0);
    CHECK(euler_char(octahedron()) == 2);
    auto b = oracle::betti(octahedron());
    CHECK(b == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("cone and suspension", "[scomplex]") {
    auto c = cone(circle4(), "o");
    CHECK(c.count(0) == 5);
    CHECK(c.count(2) == 4);
    CHECK(euler_char(c) == 1);
    try {
        cone(circle4(), "a");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ApexCollision);
    }
    auto s = suspension(circle4(), "N", "S");
    CHECK(oracle::betti(s) == std::vector<std::size_t>{1, 0, 1});
    CHECK_THROWS_AS(suspension(circle4(), "N", "N"), Error);
}

TEST_CASE("barycentric subdivision", "[scomplex]") {
    auto sd = barycentric(triangle());
    const auto& c = sd.complex;
    CHECK(c.count(0) == 7);
    CHECK(c.count(1) == 12);
    CHECK(c.count(2) == 6);
    CHECK(euler_char(c) == 1);
    CHECK(c.vertex_id("[a.b.c]").has_value());
    // every top cell is a full flag vertex < edge < triangle
    for (std::size_t i = 0; i < c.count(2); ++i) {
        auto f = sd.flag(2, i);
        CHECK(f[0].k == 0);
        CHECK(f[1].k == 1);
        CHECK(f[2].k == 2);
        CHECK(sd.carrier[2][i] == CellRef{2, 0});
    }
    auto sdo = barycentric(octahedron());
    CHECK(oracle::betti(sdo.complex) == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("dual blocks", "[scomplex]") {
    auto oct = octahedron();
    auto d = dual_blocks(oct);
    // vertex blocks are discs of 2 * (valence) triangles; edge blocks are two segments
    for (std::size_t v = 0; v < oct.count(0); ++v) CHECK(d.top_cells({0, v}).size() == 8);
    for (std::size_t e = 0; e < oct.count(1); ++e) CHECK(d.top_cells({1, e}).size() == 2);
    for (std::size_t t = 0; t < oct.count(2); ++t) CHECK(d.top_cells({2, t}).size() == 1);
    std::size_t total = 0;
    for (auto& [cell, cells] : d.block_of) total += cells.size();
    CHECK(total == d.sd.complex.total_cells());

    auto bad = SimplicialComplex::from_maximal({{"a", "b", "c"}, {"c", "d"}});
    try {
        dual_blocks(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPure);
    }
}

TEST_CASE("masks, closure and open stars", "[scomplex]") {
    auto x = triangle();
    CellMask m = empty_mask(x);
    m[2][0] = 1;
    CHECK_FALSE(mask_is_closed(x, m));
    auto cl = closure(x, m);
    CHECK(mask_is_closed(x, cl));
    CHECK(cl == full_mask(x));
    auto star = open_star(x, {*x.vertex_id("a")});
    CHECK(star[0] == std::vector<char>{1, 0, 0});
    CHECK(mask_is_closed(x, complement(star)));
    auto sub = subcomplex(x, complement(star));
    CHECK(sub.count(0) == 2);
    CHECK(sub.count(1) == 1);
}
