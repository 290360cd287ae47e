#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rih/engine.hpp"
#include "rih/subdivide.hpp"

using namespace rih;

namespace {

using Dims = std::vector<std::size_t>;

// Cone on a disjoint union of triangles, apex o, rims as a codim-1 stratum.
Space cone_on_circles(int circles) {
    std::vector<std::vector<std::string>> tops;
    std::vector<std::vector<std::string>> rim;
    for (int c = 0; c < circles; ++c)
        for (int i = 0; i < 3; ++i) {
            std::string a = "r" + std::to_string(c) + std::to_string(i);
            std::string b = "r" + std::to_string(c) + std::to_string((i + 1) % 3);
            tops.push_back({"o", a, b});
            rim.push_back({a, b});
        }
    auto x = SimplicialComplex::from_maximal(tops);
    std::map<int, std::vector<CellRef>> sk;
    sk[0].push_back(x.cell_of({"o"}));
    sk[1] = sk[0];
    for (auto& e : rim) sk[1].push_back(x.cell_of(e));
    auto f = Filtration::from_skeleta(x, 2, sk);
    return Space::make(std::move(x), std::move(f));
}

CellMask star_of(const Space& sp, const std::string& v) { return open_star(sp.x, {*sp.x.vertex_id(v)}); }

// IH dimensions from ranks of the boundary restricted to allowable chains,
// computed with the dense oracle.
Dims dims_by_rank(const AllowableComplex& a) {
    const auto& x = a.space().x;
    const int n = x.dim();
    std::vector<std::size_t> rank_d(static_cast<std::size_t>(n + 2), 0);
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> img;
        for (auto& v : a.ic(k).basis) {
            Chain bd = a.rel_boundary(Chain{k, v});
            std::vector<int> row(x.count(k - 1), 0);
            for (auto i : bd.support()) row[i] = 1;
            img.push_back(std::move(row));
        }
        rank_d[static_cast<std::size_t>(k)] = oracle::dense_rank(img);
    }
    Dims out;
    for (int k = 0; k <= n; ++k)
        out.push_back(a.ic(k).dim() - rank_d[static_cast<std::size_t>(k)] - rank_d[static_cast<std::size_t>(k + 1)]);
    return out;
}

std::size_t largest_degree(const Space& sp) {
    std::size_t m = 0;
    for (int k = 0; k <= sp.x.dim(); ++k) m = std::max(m, sp.x.count(k));
    return m;
}

}  // namespace

TEST_CASE("ordinary homology matches the dense oracle", "[engine]") {
    for (auto& e : corpus::all()) {
        auto ws = fx::load(e);
        for (auto& [name, sp] : ws.spaces) {
            INFO(e.file << " " << name);
            CHECK(homology(sp->x).dims() == oracle::betti(sp->x));
        }
    }
    auto ws = fx::load(corpus::torus());
    CHECK(homology(ws.space("torus").x).dims() == Dims{1, 2, 1});
    auto rp = fx::load(corpus::rp2());
    CHECK(homology(rp.space("rp2").x).dims() == Dims{1, 1, 1});
}

TEST_CASE("intersection homology of curves", "[engine]") {
    auto node = fx::load(corpus::node());
    auto tac = fx::load(corpus::tacnode());
    auto pp = default_pair(1);
    CHECK(ih_compact(node.space("figure8"), pp).dims() == Dims{1, 1});
    CHECK(ih_compact(tac.space("figure8"), pp).dims() == Dims{2, 2});
    // the underlying figure eight itself
    CHECK(homology(node.space("figure8").x).dims() == Dims{1, 2});
}

TEST_CASE("intersection homology of surfaces", "[engine]") {
    auto pinched = fx::load(corpus::pinched_sphere());
    CHECK(ih_compact(pinched.space("pinched"), default_pair(2)).dims() == Dims{1, 0, 1});
    auto torus = fx::load(corpus::torus());
    CHECK(ih_compact(torus.space("torus_pt"), default_pair(2)).dims() == Dims{1, 2, 1});
    CHECK(ih_compact(torus.space("torus"), default_pair(2)).dims() == Dims{1, 2, 1});
}

TEST_CASE("cone relative to its rim", "[engine]") {
    auto ws = fx::load(corpus::cone_circle());
    const auto& sp = ws.space("cone");
    CellMask rim = complement(star_of(sp, "o"));
    CHECK(ih_relative(sp, default_pair(2), rim).dims() == Dims{0, 0, 1});
    CHECK(relative_homology(sp.x, rim).dims() == Dims{0, 0, 1});
}

TEST_CASE("open cone with compact and closed supports", "[engine]") {
    auto ws = fx::load(corpus::cone_circle());
    const auto& sp = ws.space("cone");
    auto star = star_of(sp, "o");
    CHECK(ih_closed(sp, default_pair(2), star).dims() == Dims{0, 0, 1});
    CHECK(ih_open_compact(sp, default_pair(2), star).dims() == Dims{1, 0, 0});
}

TEST_CASE("cone on two circles", "[engine]") {
    Space sp = cone_on_circles(2);
    auto star = star_of(sp, "o");
    CHECK(ih_closed(sp, default_pair(2), star).dims() == Dims{0, 0, 2});
    CHECK(ih_open_compact(sp, default_pair(2), star).dims() == Dims{2, 0, 0});
    // the apex joins the two cones in ordinary homology
    CHECK(homology(sp.x).dims() == Dims{1, 0, 0});
}

TEST_CASE("relative and closed supports reject bad subsets", "[engine]") {
    auto ws = fx::load(corpus::cone_circle());
    const auto& sp = ws.space("cone");
    auto pp = default_pair(2);
    CellMask open_bit = empty_mask(sp.x);
    open_bit[1][0] = 1;
    try {
        ih_relative(sp, pp, open_bit);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotClosed);
    }
    CellMask one_vertex = empty_mask(sp.x);
    one_vertex[0][*sp.x.vertex_id("r0")] = 1;
    try {
        ih_relative(sp, pp, one_vertex);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnionOfStrata);
    }
    try {
        ih_closed(sp, pp, one_vertex);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ComplementNotClosed);
    }
}

TEST_CASE("dimensions counted two ways", "[engine]") {
    for (auto& e : corpus::all()) {
        auto ws = fx::load(e);
        for (auto& [name, sp] : ws.spaces) {
            INFO(e.file << " " << name);
            AllowableComplex a(*sp, default_pair(sp->n()));
            Dims direct;
            for (int k = 0; k <= a.top(); ++k) direct.push_back(a.dim(k));
            CHECK(direct == dims_by_rank(a));
        }
    }
}

TEST_CASE("representatives are independent allowable cycles", "[engine]") {
    for (auto& e : corpus::all()) {
        auto ws = fx::load(e);
        for (auto& [name, sp] : ws.spaces) {
            AllowableComplex a(*sp, default_pair(sp->n()));
            for (int k = 0; k <= a.top(); ++k) {
                auto d = a.degree(k);
                for (auto& r : d.reps) {
                    CHECK(a.in_ic(r));
                    CHECK(a.is_cycle(r));
                    CHECK_FALSE(a.is_boundary(r));
                    CHECK(a.canonical(r) == r);
                }
                CHECK(a.class_rank(k, d.reps) == d.dim);
            }
        }
    }
}

TEST_CASE("engine agrees with exhaustive enumeration", "[engine][slow]") {
    std::size_t checked = 0;
    for (auto& e : corpus::all()) {
        auto ws = fx::load(e);
        for (auto& [name, sp] : ws.spaces) {
            if (largest_degree(*sp) > 21) continue;
            INFO(e.file << " " << name);
            oracle::BruteForce bf(*sp);
            auto pp = default_pair(sp->n());
            CHECK(ih_compact(*sp, pp).dims() == bf.ih(pp.p.values, pp.q.values, 21));
            ++checked;
        }
    }
    CHECK(checked >= 12);
}

TEST_CASE("literal mode on the corpus curves and surfaces", "[engine]") {
    auto node = fx::load(corpus::node());
    CHECK(ih_compact(node.space("figure8"), default_pair(1), LooseMode::literal).dims() == Dims{1, 1});
    auto pinched = fx::load(corpus::pinched_sphere());
    CHECK(ih_compact(pinched.space("pinched"), default_pair(2), LooseMode::literal).dims() == Dims{1, 0, 1});
}
