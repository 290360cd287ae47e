#include <catch_amalgamated.hpp>

#include "rih/corpus.hpp"
#include "rih/scx.hpp"
#include "rih/strat.hpp"

using namespace rih;

namespace {

SimplicialComplex figure_eight() {
    return SimplicialComplex::from_maximal(
        {{"v0", "a"}, {"a", "b"}, {"b", "v0"}, {"v0", "c"}, {"c", "d"}, {"d", "v0"}});
}

SimplicialComplex circle4() {
    return SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

Filtration mark(const SimplicialComplex& x, int n, std::map<int, std::vector<std::vector<std::string>>> sk) {
    std::map<int, std::vector<CellRef>> cells;
    for (auto& [j, list] : sk)
        for (auto& s : list) cells[j].push_back(x.cell_of(s));
    return Filtration::from_skeleta(x, n, cells);
}

}  // namespace

TEST_CASE("strata of the figure eight", "[strat]") {
    auto x = figure_eight();
    auto f = mark(x, 1, {{0, {{"v0"}}}});
    auto s = strata(x, f);
    REQUIRE(s.strata.size() == 3);
    CHECK(s.strata[0].codim == 1);
    CHECK(s.strata[0].cells.size() == 1);
    CHECK(s.strata[1].codim == 0);
    CHECK(s.strata[2].codim == 0);
    // each open petal: two vertices and three edges
    CHECK(s.strata[1].cells.size() == 5);
    CHECK(s.codim(x.cell_of({"v0"})) == 1);
    CHECK(s.codim(x.cell_of({"a", "b"})) == 0);
    CHECK(s.stratum(x.cell_of({"a"})) != s.stratum(x.cell_of({"c"})));
    CHECK(check_frontier(x, f).ok);
}

TEST_CASE("trivial filtration has one stratum per component", "[strat]") {
    auto x = SimplicialComplex::from_maximal({{"a", "b"}, {"c", "d"}});
    auto s = strata(x, Filtration::trivial(x));
    CHECK(s.strata.size() == 2);
    for (auto& st : s.strata) CHECK(st.codim == 0);
}

TEST_CASE("frontier violations are reported", "[strat]") {
    // a triangle with a whisker c,d: the whisker stratum touches the closure
    // of the open triangle only at c
    auto w = SimplicialComplex::from_maximal({{"a", "b", "c"}, {"c", "d"}});
    auto f = mark(w, 2, {{1, {{"a", "b"}, {"c", "d"}}}});
    auto rep = check_frontier(w, f);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());
    // cutting the whisker at c repairs it
    auto g = mark(w, 2, {{0, {{"c"}}}, {1, {{"a", "b"}, {"c", "d"}}}});
    CHECK(check_frontier(w, g).ok);

    auto x = SimplicialComplex::from_maximal({{"a", "b", "c"}});
    CHECK(check_frontier(x, mark(x, 2, {{0, {{"a"}}}, {1, {{"a", "b"}}}})).ok);
}

TEST_CASE("malformed filtrations", "[strat]") {
    auto x = SimplicialComplex::from_maximal({{"a", "b", "c"}});
    try {
        mark(x, 2, {{0, {{"a", "b"}}}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedFiltration);
    }
    try {
        mark(x, 2, {{0, {{"a"}}}, {1, {{"b", "c"}}}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonNestedSkeleton);
    }
    CHECK_THROWS_AS(mark(x, 1, {}), Error);
    // a level below the simplex dimension
    auto lv = Filtration::trivial(x).levels();
    lv[1][0] = 0;
    CHECK_THROWS_AS(Filtration::from_levels(x, 2, lv), Error);
}

TEST_CASE("refinement", "[strat]") {
    auto x = circle4();
    auto fa = mark(x, 1, {{0, {{"a"}}}});
    auto fc = mark(x, 1, {{0, {{"c"}}}});
    auto triv = Filtration::trivial(x);
    CHECK(refines(x, fa, triv));
    CHECK_FALSE(refines(x, triv, fa));
    CHECK_FALSE(refines(x, fa, fc));

    auto both = common_refinement(x, fa, fc);
    CHECK(refines(x, both, fa));
    CHECK(refines(x, both, fc));
    CHECK(both.level(x.cell_of({"a"})) == 0);
    CHECK(both.level(x.cell_of({"c"})) == 0);
    CHECK(both.level(x.cell_of({"b"})) == 1);
    CHECK(strata(x, both).strata.size() == 4);
    CHECK(check_frontier(x, both).ok);
}

TEST_CASE("common refinement of two surface stratifications", "[strat]") {
    // the same disc cut once along a,c and once along b,d
    auto x = SimplicialComplex::from_maximal({{"o", "a", "b"}, {"o", "b", "c"}, {"o", "c", "d"}, {"o", "d", "a"}});
    auto f1 = mark(x, 2, {{1, {{"a", "o"}, {"o", "c"}}}});
    auto f2 = mark(x, 2, {{1, {{"b", "o"}, {"o", "d"}}}});
    auto r = common_refinement(x, f1, f2);
    CHECK(refines(x, r, f1));
    CHECK(refines(x, r, f2));
    // o lies on both cuts, so it drops to a point stratum
    CHECK(r.level(x.cell_of({"o"})) == 0);
    CHECK(check_frontier(x, r).ok);
}

TEST_CASE("every corpus stratification satisfies the frontier condition", "[strat]") {
    for (auto& e : corpus::all()) {
        auto ws = scx::load(scx::parse_scx(e.text));
        for (auto& [name, sp] : ws.spaces) {
            INFO(e.file << " " << name);
            CHECK(check_frontier(sp->x, sp->f).ok);
        }
    }
}
