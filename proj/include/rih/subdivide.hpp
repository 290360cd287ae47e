#pragma once

// Barycentric subdivision of a stratified space, and compact-support IH of
// open unions of cells computed on the subdivision.

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "rih/engine.hpp"
#include "rih/scomplex.hpp"
#include "rih/space.hpp"

namespace rih {

struct SubdividedSpace {
    Subdivision sd;
    Space space;
};

// Strata are inherited through carriers. Sheets around an sd face inherit
// the base pairing when the face is a full flag of a base simplex; when the
// face lies in the interior of a base d-simplex its two sheets inside that
// simplex are paired; all other sheets are unmatched.
inline SubdividedSpace subdivide(const Space& base) {
    Subdivision sd = barycentric(base.x);
    const auto& c = sd.complex;
    std::vector<std::vector<int>> lvl(static_cast<std::size_t>(c.dim() + 1));
    for (int k = 0; k <= c.dim(); ++k)
        for (std::size_t i = 0; i < c.count(k); ++i)
            lvl[static_cast<std::size_t>(k)].push_back(base.f.level(sd.carrier[static_cast<std::size_t>(k)][i]));
    Filtration f = Filtration::from_levels(c, base.n(), std::move(lvl));

    SheetPairing p;
    for (int d = 1; d <= c.dim(); ++d)
        for (std::size_t r = 0; r < c.count(d - 1); ++r) {
            auto fl = sd.flag(d - 1, r);
            const CellRef top = fl.back();
            std::vector<std::pair<std::size_t, std::size_t>> prs;
            const auto& sheets = c.cofacets(d - 1, r);
            if (top.k == d) {
                std::vector<std::size_t> inner;
                for (auto s : sheets)
                    if (sd.carrier[static_cast<std::size_t>(d)][s] == top) inner.push_back(s);
                if (inner.size() == 2) prs.push_back({inner[0], inner[1]});
            } else if (top.k == d - 1 && d <= base.x.dim()) {
                Matching m = base.pairing.at(base.x, top);
                auto sheet_over = [&](std::size_t s) {
                    for (auto t : sheets)
                        if (sd.carrier[static_cast<std::size_t>(d)][t] == CellRef{d, s}) return t;
                    throw Error(ErrorKind::InvalidPairing, "missing subdivided sheet");
                };
                for (auto& [a, b] : m.pairs) prs.push_back({sheet_over(a), sheet_over(b)});
            }
            p.set(c, {d - 1, r}, std::move(prs));
        }
    Space sp = Space::make(c, std::move(f), std::move(p));
    return {std::move(sd), std::move(sp)};
}

// Full subcomplex of the subdivision on the barycenters of cells in v, with
// strata and pairing restricted. A sheet whose partner falls outside becomes
// unmatched.
inline Space open_part(const SubdividedSpace& ss, const CellMask& v) {
    const auto& c = ss.space.x;
    CellMask keep = empty_mask(c);
    for (int k = 0; k <= c.dim(); ++k)
        for (std::size_t i = 0; i < c.count(k); ++i) {
            bool all = true;
            for (auto u : c.simplex(k, i)) all = all && in_mask(v, ss.sd.vertex_cell[static_cast<std::size_t>(u)]);
            keep[static_cast<std::size_t>(k)][i] = all;
        }
    SimplicialComplex kx = subcomplex(c, keep);
    if (kx.empty()) return Space::make(kx, Filtration::from_levels(kx, ss.space.n(), {}));
    auto to_outer = [&](int k, std::size_t i) {
        Simplex s;
        for (auto u : kx.simplex(k, i)) s.push_back(*c.vertex_id(kx.vertex_name(u)));
        std::sort(s.begin(), s.end());
        return *c.find(s);
    };
    std::vector<std::vector<int>> lvl(static_cast<std::size_t>(kx.dim() + 1));
    std::vector<std::vector<std::size_t>> outer(static_cast<std::size_t>(kx.dim() + 1));
    for (int k = 0; k <= kx.dim(); ++k)
        for (std::size_t i = 0; i < kx.count(k); ++i) {
            std::size_t o = to_outer(k, i);
            outer[static_cast<std::size_t>(k)].push_back(o);
            lvl[static_cast<std::size_t>(k)].push_back(ss.space.f.level({k, o}));
        }
    Filtration f = Filtration::from_levels(kx, ss.space.n(), std::move(lvl));
    SheetPairing p;
    for (int d = 1; d <= kx.dim(); ++d) {
        std::map<std::size_t, std::size_t> inner;  // outer d-cell -> kx index
        for (std::size_t i = 0; i < kx.count(d); ++i) inner[outer[static_cast<std::size_t>(d)][i]] = i;
        for (std::size_t r = 0; r < kx.count(d - 1); ++r) {
            Matching m = ss.space.pairing.at(c, {d - 1, outer[static_cast<std::size_t>(d - 1)][r]});
            std::vector<std::pair<std::size_t, std::size_t>> prs;
            for (auto& [a, b] : m.pairs)
                if (inner.count(a) && inner.count(b)) prs.push_back({inner[a], inner[b]});
            p.set(kx, {d - 1, r}, std::move(prs));
        }
    }
    return Space::make(std::move(kx), std::move(f), std::move(p));
}

inline bool is_open(const SimplicialComplex& x, const CellMask& v) { return mask_is_closed(x, complement(v)); }

inline IHResult ih_open_compact(const Space& sp, const PerversityPair& pp, const CellMask& v,
                                LooseMode mode = LooseMode::primary) {
    if (!is_open(sp.x, v)) throw Error(ErrorKind::ComplementNotClosed, "set is not open");
    SubdividedSpace ss = subdivide(sp);
    Space part = open_part(ss, v);
    if (part.x.empty()) return {"compact", {}};
    return AllowableComplex(part, pp, mode).result("compact");
}

// Closed supports on an open set, through the relative complex. Unlike
// ih_closed, the open set need not be a union of strata: relative rows come
// only from cells outside the complement.
inline IHResult ih_open_closed(const Space& sp, const PerversityPair& pp, const CellMask& v,
                               LooseMode mode = LooseMode::primary) {
    CellMask y = complement(v);
    if (!mask_is_closed(sp.x, y)) throw Error(ErrorKind::ComplementNotClosed, "set is not open");
    return AllowableComplex(sp, pp, mode, y).result("closed");
}

}  // namespace rih
