#pragma once

// Resolutions as simplicial maps: smallness, strict transform, and the
// comparison between H_*(resolution) and IH_*(base).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rih/chains.hpp"
#include "rih/engine.hpp"
#include "rih/gf2.hpp"
#include "rih/perversity.hpp"
#include "rih/space.hpp"

namespace rih {

struct ResolutionDatum {
    SimplicialMap map;
    CellMask e;  // exceptional subcomplex of the source
    CellMask y;  // its image, a subcomplex of the target

    const SimplicialComplex& source() const { return map.source(); }
    const SimplicialComplex& target() const { return map.target(); }

    // y is the closed image of e, and e must be all of the preimage of y.
    static ResolutionDatum make(SimplicialMap f, CellMask e) {
        const auto& s = f.source();
        if (!mask_is_closed(s, e)) throw Error(ErrorKind::InvalidResolution, "exceptional set is not a subcomplex");
        std::vector<CellRef> cells;
        for (int k = 0; k <= s.dim(); ++k)
            for (std::size_t i = 0; i < s.count(k); ++i)
                if (e[static_cast<std::size_t>(k)][i]) cells.push_back({k, i});
        CellMask y = image_closure(f, cells);
        for (int k = 0; k <= s.dim(); ++k)
            for (std::size_t i = 0; i < s.count(k); ++i) {
                bool over_y = in_mask(y, f.image({k, i}));
                if (over_y != static_cast<bool>(e[static_cast<std::size_t>(k)][i]))
                    throw Error(ErrorKind::InvalidResolution,
                                s.label(k, i) + (over_y ? " lies over y but is not exceptional"
                                                        : " is exceptional but does not lie over y"));
            }
        ResolutionDatum r{std::move(f), std::move(e), std::move(y)};
        // birational: away from y, every top simplex is covered exactly once
        const int n = r.target().dim();
        auto mult = r.dp_multiplicity();
        for (std::size_t i = 0; i < r.target().count(n); ++i)
            if (!r.y[static_cast<std::size_t>(n)][i] && mult[static_cast<std::size_t>(n)][i] != 1)
                throw Error(ErrorKind::InvalidResolution, r.target().label(n, i) + " has " +
                                                              std::to_string(mult[static_cast<std::size_t>(n)][i]) +
                                                              " preimages of full dimension");
        return r;
    }

    // Number of dimension-preserving preimages outside e, per target cell.
    std::vector<std::vector<int>> dp_multiplicity() const {
        const auto& t = target();
        std::vector<std::vector<int>> m(static_cast<std::size_t>(t.dim() + 1));
        for (int k = 0; k <= t.dim(); ++k) m[static_cast<std::size_t>(k)].assign(t.count(k), 0);
        const auto& s = source();
        for (int k = 0; k <= std::min(s.dim(), t.dim()); ++k)
            for (std::size_t i = 0; i < s.count(k); ++i) {
                if (e[static_cast<std::size_t>(k)][i]) continue;
                CellRef im = map.image({k, i});
                if (im.k == k) ++m[static_cast<std::size_t>(k)][im.i];
            }
        return m;
    }
};

struct StratumFiber {
    int stratum = 0;
    int dim = 0;
    int codim = 0;
    int fiber_dim = -1;  // -1: empty fibre
    bool small = true;
};

struct SmallReport {
    bool small = true;
    std::vector<StratumFiber> strata;
    // for i >= 1: dimension of the set where the fibre has dimension >= i
    std::vector<std::pair<int, int>> locus_dims;
    bool small_by_locus = true;
};

// Fibre dimensions over the singular strata of the base (those of dimension
// below n). Top-dimensional strata are skipped: a simplicial map may collapse
// simplices there without any geometric fibre.
inline SmallReport check_small(const ResolutionDatum& r, const Space& base) {
    const auto& s = r.source();
    const auto& t = r.target();
    if (!(base.x == t)) throw Error(ErrorKind::MismatchedComplex, "resolution target differs from the space");
    std::vector<std::vector<int>> fib(static_cast<std::size_t>(t.dim() + 1));
    for (int k = 0; k <= t.dim(); ++k) fib[static_cast<std::size_t>(k)].assign(t.count(k), -1);
    for (int k = 0; k <= s.dim(); ++k)
        for (std::size_t i = 0; i < s.count(k); ++i) {
            CellRef im = r.map.image({k, i});
            int& f = fib[static_cast<std::size_t>(im.k)][im.i];
            f = std::max(f, k - im.k);
        }
    SmallReport rep;
    const int n = base.n();
    std::map<int, int> locus;  // i -> dim of {fibre >= i}
    for (auto& st : base.s.strata) {
        if (st.dim >= n) continue;
        int fd = fib[static_cast<std::size_t>(st.cells.front().k)][st.cells.front().i];
        for (auto& c : st.cells)
            if (fib[static_cast<std::size_t>(c.k)][c.i] != fd)
                throw Error(ErrorKind::NonConstantFiberDim,
                            "fibre dimension varies over stratum " + std::to_string(st.id) + " (at " +
                                t.label(c.k, c.i) + ")");
        StratumFiber sf{st.id, st.dim, st.codim, fd, 2 * fd < st.codim};
        rep.small = rep.small && sf.small;
        rep.strata.push_back(sf);
        int sdim = -1;
        for (auto& c : st.cells) sdim = std::max(sdim, c.k);
        for (int i = 1; i <= fd; ++i) locus[i] = std::max(locus.count(i) ? locus[i] : -1, sdim);
    }
    for (auto& [i, d] : locus) {
        rep.locus_dims.push_back({i, d});
        rep.small_by_locus = rep.small_by_locus && d < n - 2 * i;
    }
    return rep;
}

// s(C): the k-simplices outside e whose image is a face of some simplex of C.
// Images of lower dimension are kept, so a collapsed simplex over C counts.
inline Chain strict_transform(const ResolutionDatum& r, const Chain& c) {
    const auto& s = r.source();
    const auto& t = r.target();
    Chain out = Chain::zero(s, c.k);
    if (c.k > s.dim()) return out;
    CellMask cl = empty_mask(t);
    for (auto i : c.support()) cl[static_cast<std::size_t>(c.k)][i] = 1;
    cl = closure(t, cl);
    for (std::size_t i = 0; i < s.count(c.k); ++i) {
        if (r.e[static_cast<std::size_t>(c.k)][i]) continue;
        if (in_mask(cl, r.map.image({c.k, i}))) out.cells.set(i);
    }
    return out;
}

struct SmallResDegree {
    int k = 0;
    std::size_t h_dim = 0;   // H_k(resolution)
    std::size_t ih_dim = 0;  // IH^c_k(base)
    std::size_t forward_generic = 0;   // H classes with a representative z, pi_* z allowable and s(pi_* z) = z
    std::size_t backward_generic = 0;  // IH classes with C, s(C) a cycle and pi_* s(C) = C
    bool forward_iso = false;   // pi_* images independent in IH
    bool backward_iso = false;  // s images independent in H
    std::vector<std::string> notes;
    bool pass() const {
        return h_dim == ih_dim && forward_generic == h_dim && backward_generic == ih_dim && forward_iso &&
               backward_iso;
    }
};

struct SmallResReport {
    std::vector<SmallResDegree> degrees;
    bool pass() const {
        return std::all_of(degrees.begin(), degrees.end(), [](auto& d) { return d.pass(); });
    }
};

namespace detail {

// Linear pieces of pi_* and s on k-chains.
struct ResolutionLinear {
    gf2::Gf2Matrix push;       // target k-cells x source k-cells
    gf2::Gf2Matrix lift;       // source x target: dimension-preserving preimages outside e
    gf2::BitVector collapsed;  // target k-cells containing the image of a collapsed k-simplex outside e
    gf2::BitVector even;       // target k-cells with an even number of such preimages

    ResolutionLinear(const ResolutionDatum& r, int k) {
        const auto& s = r.source();
        const auto& t = r.target();
        push = gf2::Gf2Matrix(t.count(k), s.count(k));
        lift = gf2::Gf2Matrix(s.count(k), t.count(k));
        collapsed = gf2::BitVector(t.count(k));
        even = gf2::BitVector(t.count(k));
        std::vector<int> mult(t.count(k), 0);
        for (std::size_t i = 0; i < s.count(k); ++i) {
            CellRef im = r.map.image({k, i});
            bool exc = r.e[static_cast<std::size_t>(k)][i];
            if (im.k == k) {
                push.flip(im.i, i);
                if (!exc) {
                    lift.set(i, im.i);
                    ++mult[im.i];
                }
            } else if (!exc) {
                for (std::size_t j = 0; j < t.count(k); ++j) {
                    const Simplex& tj = t.simplex(k, j);
                    const Simplex& fi = t.simplex(im);
                    if (std::includes(tj.begin(), tj.end(), fi.begin(), fi.end())) collapsed.set(j);
                }
            }
        }
        for (std::size_t j = 0; j < t.count(k); ++j)
            if (mult[j] % 2 == 0) even.set(j);
    }
};

inline gf2::Gf2Matrix mask_rows(const gf2::BitVector& m) {
    gf2::Gf2Matrix out(0, m.size());
    for (auto j : m.indices()) {
        gf2::BitVector r(m.size());
        r.set(j);
        out.append_row(std::move(r));
    }
    return out;
}

// Looks for v in (v0 + span(gens)) with pred(v); linear system first, then a
// bounded walk through the coset.
template <class Pred>
std::optional<gf2::BitVector> find_in_coset(const gf2::BitVector& v0, const std::vector<gf2::BitVector>& gens,
                                            const gf2::Gf2Matrix& lin, Pred pred, std::size_t budget = 4096) {
    if (lin.rows() > 0) {
        // lin (v0 + G b) = 0  <=>  (lin G) b = lin v0
        gf2::Gf2Matrix g(v0.size(), gens.size());
        for (std::size_t c = 0; c < gens.size(); ++c)
            for (auto r : gens[c].indices()) g.set(r, c);
        auto b = gf2::solve(lin * g, lin * v0);
        if (b) {
            gf2::BitVector v = v0;
            for (auto c : b->indices()) v ^= gens[c];
            if (pred(v)) return v;
        }
    }
    std::size_t bits = std::min<std::size_t>(gens.size(), 12);
    std::size_t total = std::min<std::size_t>(budget, std::size_t{1} << bits);
    for (std::size_t m = 0; m < total; ++m) {
        gf2::BitVector v = v0;
        for (std::size_t c = 0; c < bits; ++c)
            if (m & (std::size_t{1} << c)) v ^= gens[c];
        if (pred(v)) return v;
    }
    return std::nullopt;
}

}  // namespace detail

inline SmallResReport verify_smallres(const ResolutionDatum& r, const Space& base, const PerversityPair& pp,
                                      LooseMode mode = LooseMode::primary) {
    if (!check_small(r, base).small) throw Error(ErrorKind::NotSmall, "resolution is not small");
    const auto& s = r.source();
    const auto& t = r.target();
    Space up = Space::plain(s);
    AllowableComplex hx(up, default_pair(up.n()));
    AllowableComplex ic(base, pp, mode);
    SmallResReport rep;
    const int top = std::max(s.dim(), t.dim());
    for (int k = 0; k <= top; ++k) {
        SmallResDegree d;
        d.k = k;
        d.h_dim = k <= s.dim() ? hx.dim(k) : 0;
        d.ih_dim = k <= t.dim() ? ic.dim(k) : 0;
        if (k > s.dim() || k > t.dim()) {
            d.forward_iso = d.backward_iso = true;
            if (d.h_dim || d.ih_dim) d.notes.push_back("degree exists on one side only");
            rep.degrees.push_back(d);
            continue;
        }
        detail::ResolutionLinear lin(r, k);
        auto push = [&](const gf2::BitVector& z) { return Chain{k, lin.push * z}; };

        // H_k(resolution) -> IH_k(base)
        std::vector<gf2::BitVector> hb;  // boundaries of the resolution
        for (auto& row : hx.boundaries(k).rows()) hb.push_back(row);
        gf2::Gf2Matrix fwd = ic.ic_matrix(k) * lin.push;
        fwd.append_rows(detail::mask_rows(lin.collapsed) * lin.push);
        fwd.append_rows(lin.lift * lin.push + gf2::Gf2Matrix::identity(s.count(k)));
        std::vector<Chain> pushed;
        for (auto& z : hx.degree(k).reps) {
            auto ok = [&](const gf2::BitVector& v) {
                Chain c = push(v);
                return ic.in_ic(c) && strict_transform(r, c).cells == v;
            };
            auto found = detail::find_in_coset(z.cells, hb, fwd, ok);
            if (found) {
                ++d.forward_generic;
                pushed.push_back(push(*found));
            } else {
                d.notes.push_back("RepresentativeNotGeneric: H class " + chain_label(s, z) +
                                  " has no representative pushing to an allowable cycle");
            }
        }
        d.forward_iso = pushed.size() == d.h_dim && ic.class_rank(k, pushed) == pushed.size();

        // IH_k(base) -> H_k(resolution)
        std::vector<gf2::BitVector> ib;
        for (auto& row : ic.boundaries(k).rows()) ib.push_back(row);
        gf2::Gf2Matrix bwd = detail::mask_rows(lin.collapsed);
        bwd.append_rows(detail::mask_rows(lin.even));
        if (k >= 1) bwd.append_rows(boundary_matrix(s, k) * lin.lift);
        std::vector<Chain> lifted;
        for (auto& c : ic.degree(k).reps) {
            auto ok = [&](const gf2::BitVector& v) {
                Chain cc{k, v};
                Chain st = strict_transform(r, cc);
                return boundary(s, st).is_zero() && pushforward(r.map, st) == cc;
            };
            auto found = detail::find_in_coset(c.cells, ib, bwd, ok);
            if (found) {
                ++d.backward_generic;
                lifted.push_back(strict_transform(r, {k, *found}));
            } else {
                d.notes.push_back("RepresentativeNotGeneric: IH class " + chain_label(t, c) +
                                  " has no representative with a cycle as strict transform");
            }
        }
        d.backward_iso = lifted.size() == d.ih_dim && hx.class_rank(k, lifted) == lifted.size();
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

}  // namespace rih
