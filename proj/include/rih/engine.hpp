#pragma once

// Allowable chain complexes and their homology.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rih/chains.hpp"
#include "rih/gf2.hpp"
#include "rih/perversity.hpp"
#include "rih/space.hpp"

namespace rih {

struct IHDegree {
    std::size_t dim = 0;
    std::vector<Chain> reps;
};

struct IHResult {
    std::string supports;  // "ordinary", "compact", "relative", "closed"
    std::vector<IHDegree> degrees;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (auto& g : degrees) d.push_back(g.dim);
        return d;
    }
};

// The complex of allowable chains of a space, optionally relative to a closed
// subcomplex y. Relative chains are stored with their y-part dropped.
class AllowableComplex {
public:
    AllowableComplex(const Space& sp, PerversityPair pp, LooseMode mode = LooseMode::primary,
                     std::optional<CellMask> rel = std::nullopt)
        : sp_(&sp), rel_(std::move(rel)) {
        cx_.space = sp_;
        cx_.pp = std::move(pp);
        cx_.mode = mode;
        cx_.rel = rel_ ? &*rel_ : nullptr;
        cx_.check();
        build();
    }

    AllowableComplex(const AllowableComplex&) = delete;
    AllowableComplex& operator=(const AllowableComplex&) = delete;

    const Space& space() const { return *sp_; }
    const ConstraintContext& context() const { return cx_; }
    int top() const { return sp_->x.dim(); }
    bool relative() const { return rel_.has_value(); }

    bool in_y(CellRef c) const { return rel_ && in_mask(*rel_, c); }

    // Drops the y-part of a chain.
    Chain project(Chain c) const {
        if (!rel_ || c.k < 0) return c;
        for (auto i : c.support())
            if (in_y({c.k, i})) c.cells.flip(i);
        return c;
    }
    Chain rel_boundary(const Chain& c) const { return project(boundary(sp_->x, c)); }

    const gf2::Gf2Matrix& ic_matrix(int k) const { return ic_rows_[static_cast<std::size_t>(k)]; }
    const gf2::Subspace& ic(int k) const { return ic_[static_cast<std::size_t>(k)]; }
    const gf2::Subspace& cycles(int k) const { return z_[static_cast<std::size_t>(k)]; }
    const gf2::Echelon& boundaries(int k) const { return b_[static_cast<std::size_t>(k)]; }

    bool in_ic(const Chain& c) const {
        return c.k >= 0 && c.k <= top() && (ic_matrix(c.k) * c.cells).none();
    }
    bool is_cycle(const Chain& c) const { return rel_boundary(c).is_zero(); }
    bool is_boundary(const Chain& c) const { return boundaries(c.k).contains(c.cells); }
    // Least representative of the class of c, in the order where higher simplex
    // indices are more significant.
    Chain canonical(const Chain& c) const { return {c.k, canon_[static_cast<std::size_t>(c.k)].reduce(c.cells)}; }

    std::size_t dim(int k) const { return z_[static_cast<std::size_t>(k)].dim() - b_[static_cast<std::size_t>(k)].size(); }

    // Rank of the span of the given cycles modulo allowable boundaries.
    std::size_t class_rank(int k, const std::vector<Chain>& cs) const {
        gf2::Echelon e = b_[static_cast<std::size_t>(k)];
        std::size_t r = 0;
        for (auto& c : cs) r += e.insert(c.cells) ? 1 : 0;
        return r;
    }

    IHDegree degree(int k) const {
        IHDegree out;
        gf2::Echelon e = b_[static_cast<std::size_t>(k)];
        for (auto& z : z_[static_cast<std::size_t>(k)].basis)
            if (e.insert(z)) out.reps.push_back(canonical({k, z}));
        out.dim = out.reps.size();
        return out;
    }

    IHResult result(std::string supports) const {
        IHResult r{std::move(supports), {}};
        for (int k = 0; k <= top(); ++k) r.degrees.push_back(degree(k));
        return r;
    }

private:
    void build() {
        const auto& x = sp_->x;
        const int n = x.dim();
        std::vector<gf2::Gf2Matrix> a(static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) {
            a[static_cast<std::size_t>(k)] = compile_constraints(cx_, k);
            // y coordinates are projected out
            if (rel_)
                for (std::size_t i = 0; i < x.count(k); ++i)
                    if (in_y({k, i})) {
                        gf2::BitVector r(x.count(k));
                        r.set(i);
                        a[static_cast<std::size_t>(k)].append_row(std::move(r));
                    }
        }
        std::vector<gf2::Gf2Matrix> d(static_cast<std::size_t>(n + 2));
        for (int k = 0; k <= n; ++k) {
            gf2::Gf2Matrix dk = boundary_matrix(x, k);
            if (rel_ && k >= 1)
                for (std::size_t r = 0; r < dk.rows(); ++r)
                    if (in_y({k - 1, r}))
                        for (std::size_t c = 0; c < dk.cols(); ++c) dk.set(r, c, false);
            d[static_cast<std::size_t>(k)] = std::move(dk);
        }
        ic_rows_.resize(static_cast<std::size_t>(n + 1));
        ic_.resize(static_cast<std::size_t>(n + 1));
        z_.resize(static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) {
            gf2::Gf2Matrix m = a[static_cast<std::size_t>(k)];
            if (k >= 1) m.append_rows(a[static_cast<std::size_t>(k - 1)] * d[static_cast<std::size_t>(k)]);
            ic_rows_[static_cast<std::size_t>(k)] = m;
            ic_[static_cast<std::size_t>(k)] = gf2::nullspace(m);
            if (k >= 1) m.append_rows(d[static_cast<std::size_t>(k)]);
            z_[static_cast<std::size_t>(k)] = gf2::nullspace(m);
        }
        b_.assign(static_cast<std::size_t>(n + 1), gf2::Echelon());
        canon_.assign(static_cast<std::size_t>(n + 1), gf2::Echelon());
        for (int k = 0; k <= n; ++k) {
            b_[static_cast<std::size_t>(k)] = gf2::Echelon(x.count(k));
            canon_[static_cast<std::size_t>(k)] = gf2::Echelon(x.count(k), gf2::PivotOrder::highest);
            if (k + 1 > n) continue;
            for (auto& v : ic_[static_cast<std::size_t>(k + 1)].basis) {
                gf2::BitVector img = d[static_cast<std::size_t>(k + 1)] * v;
                b_[static_cast<std::size_t>(k)].insert(img);
                canon_[static_cast<std::size_t>(k)].insert(img);
            }
        }
        // boundaries of allowable chains are allowable cycles
        for (int k = 0; k <= n; ++k) {
            gf2::Subspace bs{x.count(k), b_[static_cast<std::size_t>(k)].rows()};
            gf2::quotient_dim(z_[static_cast<std::size_t>(k)], bs);
        }
    }

    const Space* sp_;
    std::optional<CellMask> rel_;
    ConstraintContext cx_;
    std::vector<gf2::Gf2Matrix> ic_rows_;
    std::vector<gf2::Subspace> ic_;
    std::vector<gf2::Subspace> z_;
    std::vector<gf2::Echelon> b_;
    std::vector<gf2::Echelon> canon_;
};

inline IHResult homology(const SimplicialComplex& x) {
    Space sp = Space::plain(x);
    return AllowableComplex(sp, default_pair(sp.n())).result("ordinary");
}

// Ordinary homology of x relative to a closed subcomplex.
inline IHResult relative_homology(const SimplicialComplex& x, const CellMask& y) {
    Space sp = Space::plain(x);
    return AllowableComplex(sp, default_pair(sp.n()), LooseMode::primary, y).result("relative");
}

inline IHResult ih_compact(const Space& sp, const PerversityPair& pp, LooseMode mode = LooseMode::primary) {
    return AllowableComplex(sp, pp, mode).result("compact");
}

inline bool is_union_of_strata(const Space& sp, const CellMask& m) {
    for (auto& st : sp.s.strata) {
        bool first = in_mask(m, st.cells.front());
        for (auto& c : st.cells)
            if (in_mask(m, c) != first) return false;
    }
    return true;
}

inline IHResult ih_relative(const Space& sp, const PerversityPair& pp, const CellMask& y,
                            LooseMode mode = LooseMode::primary) {
    if (!mask_is_closed(sp.x, y)) throw Error(ErrorKind::NotClosed, "relative subcomplex is not closed");
    if (!is_union_of_strata(sp, y)) throw Error(ErrorKind::NotUnionOfStrata, "relative subcomplex cuts a stratum");
    return AllowableComplex(sp, pp, mode, y).result("relative");
}

// Closed supports on an open union of strata v, through the relative complex
// (x, x \ v). Representatives are the relative cycles; their closures are the
// closed-support chains of v.
inline IHResult ih_closed(const Space& sp, const PerversityPair& pp, const CellMask& v,
                          LooseMode mode = LooseMode::primary) {
    CellMask y = complement(v);
    if (!mask_is_closed(sp.x, y)) throw Error(ErrorKind::ComplementNotClosed, "complement of the open set is not closed");
    if (!is_union_of_strata(sp, y)) throw Error(ErrorKind::NotUnionOfStrata, "open set cuts a stratum");
    return AllowableComplex(sp, pp, mode, y).result("closed");
}

}  // namespace rih
