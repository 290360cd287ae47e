#pragma once

// Isolated singularities: local cones, the global formulas through a
// resolution, intersection numbers against dual blocks, and the duality and
// Mayer-Vietoris checks.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rih/chains.hpp"
#include "rih/engine.hpp"
#include "rih/resolution.hpp"
#include "rih/scomplex.hpp"
#include "rih/space.hpp"
#include "rih/subdivide.hpp"

namespace rih {

// Copies a chain between complexes that share vertex names.
inline Chain transfer(const SimplicialComplex& from, const SimplicialComplex& to, const Chain& c) {
    Chain out = Chain::zero(to, c.k);
    for (auto i : c.support()) {
        std::vector<std::string> names = from.names_of(from.simplex(c.k, i));
        Simplex s;
        for (auto& nm : names) {
            auto v = to.vertex_id(nm);
            if (!v) throw Error(ErrorKind::NotContained, "vertex '" + nm + "' missing from the target complex");
            s.push_back(*v);
        }
        std::sort(s.begin(), s.end());
        auto j = to.find(s);
        if (!j) throw Error(ErrorKind::NotContained, from.label(c.k, i) + " missing from the target complex");
        out.cells.flip(*j);
    }
    return out;
}

// A closed combinatorial d-manifold whose homology is that of the d-sphere,
// with every vertex link again sphere-like.
inline bool sphere_like(const SimplicialComplex& k, int d) {
    if (k.dim() != d) return false;
    if (d == 0) return k.count(0) == 2;
    auto h = homology(k).dims();
    for (int i = 0; i <= d; ++i)
        if (h[static_cast<std::size_t>(i)] != ((i == 0 || i == d) ? 1u : 0u)) return false;
    for (std::size_t v = 0; v < k.count(0); ++v)
        if (!sphere_like(link(k, k.simplex(0, v)), d - 1)) return false;
    return true;
}

inline bool is_nonsingular(const SimplicialComplex& l) {
    if (l.dim() <= 0) return true;
    for (std::size_t v = 0; v < l.count(0); ++v)
        if (!sphere_like(link(l, l.simplex(0, v)), l.dim() - 1)) return false;
    return true;
}

struct LocalCone {
    VertexId x0 = 0;
    SimplicialComplex link;
    CellMask star;  // open star N
    CellMask rest;  // M = X \ N
    bool nonsingular = false;

    static LocalCone make(const SimplicialComplex& x, VertexId v) {
        LocalCone c;
        c.x0 = v;
        c.link = rih::link(x, {v});
        c.star = open_star(x, {v});
        c.rest = complement(c.star);
        c.nonsingular = is_nonsingular(c.link);
        return c;
    }
};

struct Interval {
    std::size_t lo = 0, hi = 0;
    bool contains(std::size_t v) const { return lo <= v && v <= hi; }
    bool exact() const { return lo == hi; }
};

struct LocalOracle {
    std::vector<Interval> compact, closed;  // indexed by degree 0..n
};

inline LocalOracle local_ih_oracle(const LocalCone& c, int n) {
    if (!c.nonsingular) throw Error(ErrorKind::LinkSingular, "link of the cone point is singular");
    std::vector<std::size_t> hl = c.link.empty() ? std::vector<std::size_t>{} : homology(c.link).dims();
    auto h = [&](int j) -> std::size_t {
        return j >= 0 && j < static_cast<int>(hl.size()) ? hl[static_cast<std::size_t>(j)] : 0;
    };
    const int m = n / 2;
    LocalOracle o;
    for (int k = 0; k <= n; ++k) {
        Interval cpt, cl;
        if (n % 2 == 0) {
            if (k <= m - 1) cpt = {h(k), h(k)};
            if (k >= m + 1) cl = {h(k - 1), h(k - 1)};
        } else {
            if (k <= m - 1) cpt = {h(k), h(k)};
            if (k == m) cpt = {0, h(m)};
            if (k >= m + 2) cl = {h(k - 1), h(k - 1)};
            if (k == m + 1) cl = {0, h(m)};
        }
        o.compact.push_back(cpt);
        o.closed.push_back(cl);
    }
    return o;
}

struct LocalEngine {
    std::vector<std::size_t> compact, closed;
};

inline LocalEngine local_ih_engine(const Space& sp, const LocalCone& c, const PerversityPair& pp,
                                   LooseMode mode = LooseMode::primary) {
    LocalEngine e{ih_open_compact(sp, pp, c.star, mode).dims(), ih_open_closed(sp, pp, c.star, mode).dims()};
    e.compact.resize(static_cast<std::size_t>(sp.n() + 1), 0);
    e.closed.resize(static_cast<std::size_t>(sp.n() + 1), 0);
    return e;
}

// Vertices forming the positive-codimension strata, each of which must be a
// single point.
inline std::vector<VertexId> isolated_singular_points(const Space& sp) {
    std::vector<VertexId> out;
    for (auto& st : sp.s.strata) {
        if (st.codim == 0) continue;
        if (st.cells.size() != 1 || st.cells.front().k != 0)
            throw Error(ErrorKind::NotIsolated, "stratum " + std::to_string(st.id) + " is not a single point");
        out.push_back(sp.x.simplex(st.cells.front())[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Rank of the image of H_k(src) in the homology of dst under a chain map.
template <class F>
std::size_t induced_rank(const AllowableComplex& src, const AllowableComplex& dst, int k, F map) {
    if (k < 0 || k > src.top() || k > dst.top()) return 0;
    std::vector<Chain> img;
    for (auto& z : src.degree(k).reps) img.push_back(dst.project(map(z)));
    return dst.class_rank(k, img);
}

inline CellMask avoiding(const SimplicialComplex& x, const std::set<VertexId>& bad) {
    CellMask m = empty_mask(x);
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i) {
            bool ok = true;
            for (auto v : x.simplex(k, i)) ok = ok && !bad.count(v);
            m[static_cast<std::size_t>(k)][i] = ok;
        }
    return m;
}

inline std::size_t hdim(const AllowableComplex& a, int k) { return k >= 0 && k <= a.top() ? a.dim(k) : 0; }

inline void check_resolves(const Space& sp, const ResolutionDatum& r, const std::vector<VertexId>& sing) {
    if (!(r.target() == sp.x)) throw Error(ErrorKind::ResolutionMismatch, "resolution target differs from the space");
    CellMask s = empty_mask(sp.x);
    for (auto v : sing) s[0][static_cast<std::size_t>(v)] = 1;
    if (s != r.y) throw Error(ErrorKind::ResolutionMismatch, "resolution does not resolve exactly the singular points");
}

}  // namespace detail

// IH^c_*(X) for isolated singularities from ordinary homology: of X, of X
// minus the open stars, and (odd n) of a resolution.
inline std::vector<std::size_t> ih_isolated_formula(const Space& sp, const std::optional<ResolutionDatum>& r,
                                                    const PerversityPair& pp) {
    (void)pp;  // the formulas hold for the default pair only through the engine comparison
    auto sing = isolated_singular_points(sp);
    for (auto v : sing)
        if (!LocalCone::make(sp.x, v).nonsingular)
            throw Error(ErrorKind::LinkSingular, "link of " + sp.x.vertex_name(v) + " is singular");
    const int n = sp.n();
    const int m = n / 2;
    std::set<VertexId> bad(sing.begin(), sing.end());

    Space whole = Space::plain(sp.x);
    AllowableComplex hx(whole, default_pair(n));
    SimplicialComplex xn = subcomplex(sp.x, detail::avoiding(sp.x, bad));
    std::optional<Space> sxn;
    std::optional<AllowableComplex> hxn;
    if (!xn.empty()) {
        sxn.emplace(Space::plain(xn));
        hxn.emplace(*sxn, default_pair(sxn->n()));
    }
    auto below = [&](int k) { return hxn ? detail::hdim(*hxn, k) : std::size_t{0}; };
    auto into_x = [&](const Chain& c) { return transfer(xn, sp.x, c); };

    std::vector<std::size_t> out(static_cast<std::size_t>(n + 1), 0);
    if (n % 2 == 0) {
        for (int k = 0; k <= n; ++k) {
            std::size_t& d = out[static_cast<std::size_t>(k)];
            if (k > m) d = hx.dim(k);
            else if (k < m) d = below(k);
            else d = hxn ? detail::induced_rank(*hxn, hx, k, into_x) : 0;
        }
        return out;
    }
    if (!r && sing.empty()) {
        // X resolves itself, and every term collapses to H_k(X)
        for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = hx.dim(k);
        return out;
    }
    if (!r) throw Error(ErrorKind::ResolutionMismatch, "odd dimension needs a resolution");
    detail::check_resolves(sp, *r, sing);
    const auto& xt = r->source();
    Space wt = Space::plain(xt);
    AllowableComplex ht(wt, default_pair(wt.n()));
    std::set<VertexId> over;
    for (std::size_t v = 0; v < xt.count(0); ++v)
        if (bad.count(r->map(static_cast<VertexId>(v)))) over.insert(static_cast<VertexId>(v));
    SimplicialComplex xtn = subcomplex(xt, detail::avoiding(xt, over));
    std::optional<Space> stn;
    std::optional<AllowableComplex> htn;
    if (!xtn.empty()) {
        stn.emplace(Space::plain(xtn));
        htn.emplace(*stn, default_pair(stn->n()));
    }
    for (int k = 0; k <= n; ++k) {
        std::size_t& d = out[static_cast<std::size_t>(k)];
        if (k > m + 1) d = hx.dim(k);
        else if (k == m + 1)
            d = detail::induced_rank(ht, hx, k, [&](const Chain& c) { return pushforward(r->map, c); });
        else if (k == m)
            d = htn ? detail::induced_rank(*htn, ht, k, [&](const Chain& c) { return transfer(xtn, xt, c); }) : 0;
        else d = below(k);
    }
    return out;
}

// Degrees m (compact) and m+1 (closed) of the open cone in odd dimension,
// computed three ways: the engine, the image of the resolution in
// H_{m+1}(M, dM), and the connecting map into H_m of the resolved link.
struct OddLocalCheck {
    int m = 0;
    std::size_t engine_compact = 0;  // IH^c_m(N)
    std::size_t engine_closed = 0;   // IH^cl_{m+1}(N)
    std::size_t image_pi = 0;
    std::size_t image_dtilde = 0;
    std::size_t coker_dtilde = 0;
    bool consistent() const {
        return engine_closed == image_pi && image_pi == image_dtilde && engine_compact == coker_dtilde;
    }
};

inline OddLocalCheck odd_local_check(const Space& sp, const ResolutionDatum& r, VertexId x0,
                                     const PerversityPair& pp, LooseMode mode = LooseMode::primary) {
    const int n = sp.n();
    if (n % 2 == 0) throw Error(ErrorKind::DegreeOutOfRange, "the odd local check needs odd dimension");
    if (!(r.target() == sp.x)) throw Error(ErrorKind::ResolutionMismatch, "resolution target differs from the space");
    const int m = n / 2;
    LocalCone c = LocalCone::make(sp.x, x0);
    LocalEngine e = local_ih_engine(sp, c, pp, mode);

    CellMask mmask = closure(sp.x, c.star);
    CellMask lmask = mmask;
    for (int k = 0; k <= sp.x.dim(); ++k)
        for (std::size_t i = 0; i < sp.x.count(k); ++i)
            if (c.star[static_cast<std::size_t>(k)][i]) lmask[static_cast<std::size_t>(k)][i] = 0;
    const auto& xt = r.source();
    CellMask mt = empty_mask(xt), lt = empty_mask(xt);
    for (int k = 0; k <= xt.dim(); ++k)
        for (std::size_t i = 0; i < xt.count(k); ++i) {
            CellRef im = r.map.image({k, i});
            mt[static_cast<std::size_t>(k)][i] = in_mask(mmask, im);
            lt[static_cast<std::size_t>(k)][i] = in_mask(lmask, im);
        }
    SimplicialComplex M = subcomplex(sp.x, mmask);
    SimplicialComplex Mt = subcomplex(xt, mt);
    SimplicialComplex Lt = subcomplex(xt, lt);
    auto restrict = [](const SimplicialComplex& big, const CellMask& part, const SimplicialComplex& sub) {
        CellMask out = empty_mask(sub);
        for (int k = 0; k <= sub.dim(); ++k)
            for (std::size_t i = 0; i < sub.count(k); ++i) {
                Chain one = Chain::of(sub, k, {i});
                Chain b = transfer(sub, big, one);
                out[static_cast<std::size_t>(k)][i] = in_mask(part, {k, b.support().front()});
            }
        return out;
    };
    Space sM = Space::plain(M), sMt = Space::plain(Mt);
    AllowableComplex rel_m(sM, default_pair(sM.n()), LooseMode::primary, restrict(sp.x, lmask, M));
    AllowableComplex rel_mt(sMt, default_pair(sMt.n()), LooseMode::primary, restrict(xt, lt, Mt));

    OddLocalCheck out;
    out.m = m;
    out.engine_compact = e.compact[static_cast<std::size_t>(m)];
    out.engine_closed = e.closed[static_cast<std::size_t>(m + 1)];
    out.image_pi = detail::induced_rank(rel_mt, rel_m, m + 1, [&](const Chain& z) {
        return transfer(sp.x, M, pushforward(r.map, transfer(Mt, xt, z)));
    });
    std::size_t hl = 0;
    if (!Lt.empty()) {
        Space sLt = Space::plain(Lt);
        AllowableComplex hlt(sLt, default_pair(sLt.n()));
        hl = detail::hdim(hlt, m);
        std::vector<Chain> bd;
        if (m + 1 <= rel_mt.top())
            for (auto& z : rel_mt.degree(m + 1).reps) bd.push_back(transfer(Mt, Lt, boundary(Mt, z)));
        out.image_dtilde = m <= hlt.top() ? hlt.class_rank(m, bd) : 0;
    }
    out.coker_dtilde = hl - out.image_dtilde;
    return out;
}

// The sd chain named by dual-cycle entries: a lone base simplex stands for
// the top cells of its dual block, a flag for one sd cell.
inline Chain dual_chain(const DualBlockDecomposition& d, int deg,
                        const std::vector<std::vector<std::vector<std::string>>>& entries) {
    const auto& sd = d.sd.complex;
    Chain c = Chain::zero(sd, deg);
    for (auto& e : entries) {
        if (e.size() == 1) {
            CellRef b = d.base.cell_of(e.front());
            if (d.base.dim() - b.k != deg)
                throw Error(ErrorKind::DegreeOutOfRange, "dual block of " + d.base.label(b.k, b.i) + " has the wrong degree");
            for (auto& t : d.top_cells(b)) c.cells.flip(t.i);
            continue;
        }
        Simplex s;
        for (auto& f : e) s.push_back(d.sd.barycenter.at(d.base.cell_of(f)));
        std::sort(s.begin(), s.end());
        auto j = sd.find(s);
        if (!j || static_cast<int>(s.size()) - 1 != deg)
            throw Error(ErrorKind::NotASimplex, "flag entry is not a subdivision cell of degree " + std::to_string(deg));
        c.cells.flip(*j);
    }
    return c;
}

// Mod-2 count of simplices of c1 whose whole dual block lies in c2. The
// supports may meet only at such blocks, and only inside the top stratum.
inline int intersection_number(const Space& sp, const DualBlockDecomposition& d, const Chain& c1, const Chain& c2) {
    const int n = d.base.dim();
    if (c1.k + c2.k != n) throw Error(ErrorKind::DegreeOutOfRange, "intersection needs complementary degrees");
    CellMask cl = empty_mask(d.base);
    for (auto i : c1.support()) cl[static_cast<std::size_t>(c1.k)][i] = 1;
    cl = closure(d.base, cl);
    auto whole_block = [&](CellRef b) {
        for (auto& t : d.top_cells(b))
            if (!c2.cells.get(t.i)) return false;
        return true;
    };
    for (auto j : c2.support()) {
        auto fl = d.sd.flag(c2.k, j);
        std::vector<CellRef> met;
        for (auto& b : fl)
            if (in_mask(cl, b)) met.push_back(b);
        if (met.empty()) continue;
        const CellRef lo = fl.front();
        bool ok = met.size() == 1 && met.front() == lo && lo.k == c1.k && c1.cells.get(lo.i) &&
                  sp.codim(lo) == 0 && whole_block(lo);
        if (!ok) throw Error(ErrorKind::NotTransverse, "supports meet at " + d.sd.complex.label(c2.k, j));
    }
    int count = 0;
    for (auto i : c1.support())
        if (whole_block({c1.k, i})) ++count;
    return count % 2;
}

struct NamedChain {
    std::string name;
    Chain chain;
};

struct PairingReport {
    int k = 0;
    std::vector<std::string> primal, dual;  // IH^c_k and IH^cl_{n-k} representatives
    gf2::Gf2Matrix matrix;
    std::size_t rank = 0;
    std::size_t ih_dim = 0;
    bool full() const { return rank == ih_dim; }
};

inline PairingReport pairing_report(const Space& sp, const PerversityPair& pp, int k,
                                    const std::vector<NamedChain>& primal, const std::vector<NamedChain>& dual,
                                    LooseMode mode = LooseMode::primary) {
    DualBlockDecomposition d = dual_blocks(sp.x);
    AllowableComplex ic(sp, pp, mode);
    SubdividedSpace ss = subdivide(sp);
    AllowableComplex ics(ss.space, pp, mode);
    for (auto& p : primal)
        if (!ic.in_ic(p.chain) || !ic.is_cycle(p.chain))
            throw Error(ErrorKind::NotAllowable, "cycle '" + p.name + "' is not an allowable cycle");
    for (auto& q : dual) {
        Chain c = transfer(d.sd.complex, ss.space.x, q.chain);
        if (!ics.in_ic(c) || !ics.is_cycle(c))
            throw Error(ErrorKind::NotAllowable, "dual cycle '" + q.name + "' is not an allowable cycle");
    }
    PairingReport r;
    r.k = k;
    r.ih_dim = k >= 0 && k <= ic.top() ? ic.dim(k) : 0;
    r.matrix = gf2::Gf2Matrix(primal.size(), dual.size());
    for (std::size_t i = 0; i < primal.size(); ++i) {
        r.primal.push_back(primal[i].name);
        for (std::size_t j = 0; j < dual.size(); ++j)
            if (intersection_number(sp, d, primal[i].chain, dual[j].chain)) r.matrix.set(i, j);
    }
    for (auto& q : dual) r.dual.push_back(q.name);
    r.rank = gf2::rank(r.matrix);
    return r;
}

struct DualityReport {
    int n = 0;
    std::vector<std::size_t> compact;  // IH^c_k(X)
    std::vector<std::size_t> closed;   // IH^cl_k(X), on the subdivision
    std::vector<PairingReport> pairings;
    bool dims_match() const {
        for (int k = 0; k <= n; ++k)
            if (compact[static_cast<std::size_t>(k)] != closed[static_cast<std::size_t>(n - k)]) return false;
        return true;
    }
    bool pass() const {
        return dims_match() && std::all_of(pairings.begin(), pairings.end(), [](auto& p) { return p.full(); });
    }
};

inline DualityReport duality_check(const Space& sp, const PerversityPair& pp,
                                   std::vector<PairingReport> pairings = {}, LooseMode mode = LooseMode::primary) {
    isolated_singular_points(sp);
    DualityReport r;
    r.n = sp.n();
    r.compact = ih_compact(sp, pp, mode).dims();
    SubdividedSpace ss = subdivide(sp);
    r.closed = AllowableComplex(ss.space, pp, mode, empty_mask(ss.space.x)).result("closed").dims();
    r.pairings = std::move(pairings);
    return r;
}

// Alternating sum of the Mayer-Vietoris terms for X = N u X', N n X' = N'.
inline long mv_consistency(const Space& sp, const PerversityPair& pp, LooseMode mode = LooseMode::primary) {
    auto sing = isolated_singular_points(sp);
    CellMask pts = empty_mask(sp.x);
    for (auto v : sing) pts[0][static_cast<std::size_t>(v)] = 1;
    CellMask n = sing.empty() ? empty_mask(sp.x) : open_star(sp.x, sing);
    CellMask np = n, xp = complement(pts);
    for (auto v : sing) np[0][static_cast<std::size_t>(v)] = 0;
    auto chi = [](const std::vector<std::size_t>& d) {
        long s = 0;
        for (std::size_t k = 0; k < d.size(); ++k) s += (k % 2 ? -1 : 1) * static_cast<long>(d[k]);
        return s;
    };
    return chi(ih_open_compact(sp, pp, np, mode).dims()) - chi(ih_open_compact(sp, pp, xp, mode).dims()) -
           chi(ih_open_compact(sp, pp, n, mode).dims()) + chi(ih_compact(sp, pp, mode).dims());
}

}  // namespace rih
