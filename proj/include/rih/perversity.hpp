#pragma once

// Loose perversities and the linear constraints that encode allowability.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rih/chains.hpp"
#include "rih/error.hpp"
#include "rih/gf2.hpp"
#include "rih/space.hpp"

namespace rih {

struct LoosePerversity {
    std::vector<int> values;
    int operator[](int i) const { return values.at(static_cast<std::size_t>(i)); }
    std::size_t size() const { return values.size(); }
    friend bool operator==(const LoosePerversity&, const LoosePerversity&) = default;
};

struct PerversityPair {
    LoosePerversity p;
    LoosePerversity q;
    friend bool operator==(const PerversityPair&, const PerversityPair&) = default;
};

inline PerversityPair default_pair(int n) {
    PerversityPair pp;
    for (int i = 0; i <= n; ++i) {
        pp.p.values.push_back(std::max(0, (i - 1) / 2));
        pp.q.values.push_back(i / 2);
    }
    return pp;
}

struct PairValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

inline PairValidation validate_pair(const PerversityPair& pp) {
    if (pp.p.size() != pp.q.size()) throw Error(ErrorKind::LengthMismatch, "p and q have different lengths");
    PairValidation v;
    auto fail = [&](std::string why) {
        v.ok = false;
        v.violations.push_back(std::move(why));
    };
    if (pp.p.size() == 0) {
        fail("empty perversity");
        return v;
    }
    if (pp.p[0] != 0) fail("p_0 must be 0");
    if (pp.q[0] != 0) fail("q_0 must be 0");
    const int n = static_cast<int>(pp.p.size()) - 1;
    for (int i = 0; i < n; ++i) {
        for (auto* s : {&pp.p, &pp.q}) {
            const char* nm = s == &pp.p ? "p" : "q";
            int a = (*s)[i], b = (*s)[i + 1];
            if (b < a || b > a + 1)
                fail(std::string(nm) + "_" + std::to_string(i + 1) + " = " + std::to_string(b) +
                     " breaks the step rule from " + nm + "_" + std::to_string(i) + " = " + std::to_string(a));
        }
    }
    for (int i = 0; i <= n; ++i) {
        int a = pp.p[i], b = pp.q[i];
        if (b < a || b > a + 1)
            fail("q_" + std::to_string(i) + " = " + std::to_string(b) + " is not within [p_" + std::to_string(i) +
                 ", p_" + std::to_string(i) + " + 1]");
    }
    return v;
}

enum class LooseMode { primary, literal };

struct ConstraintContext {
    const Space* space = nullptr;
    PerversityPair pp;
    LooseMode mode = LooseMode::primary;
    const CellMask* rel = nullptr;  // relative subcomplex y; its cells impose nothing

    const SimplicialComplex& x() const { return space->x; }

    void check() const {
        const int n = space->n();
        if (pp.p.size() != static_cast<std::size_t>(n + 1) || pp.q.size() != static_cast<std::size_t>(n + 1))
            throw Error(ErrorKind::InvalidPair, "perversities need n + 1 = " + std::to_string(n + 1) + " entries");
        auto v = validate_pair(pp);
        if (!v.ok) throw Error(ErrorKind::InvalidPair, v.violations.front());
    }

    // Does the simplex carry a face in a singular stratum of dimension above
    // offset - i + perv_i (i the codimension)?
    bool hits(CellRef c, int offset, const LoosePerversity& perv) const {
        if (c.k < 0) return false;
        for (auto& t : x().faces(x().simplex(c))) {
            if (rel && in_mask(*rel, t)) continue;
            int i = space->codim(t);
            if (i > 0 && t.k > offset - i + perv[i]) return true;
        }
        return false;
    }
};

namespace detail {

inline gf2::BitVector star_row(const SimplicialComplex& x, int k, std::size_t rho) {
    gf2::BitVector r(x.count(k));
    for (auto s : x.cofacets(k - 1, rho)) r.set(s);
    return r;
}

// Rows saying the k-sheets at the (k-1)-face rho form a union of matched pairs.
inline void pairing_rows(const ConstraintContext& cx, int k, std::size_t rho, gf2::Gf2Matrix& m) {
    Matching mt = cx.space->pairing.at(cx.x(), {k - 1, rho});
    for (auto& [a, b] : mt.pairs) {
        gf2::BitVector r(cx.x().count(k));
        r.set(a);
        r.set(b);
        m.append_row(std::move(r));
    }
    for (auto c : mt.unmatched) {
        gf2::BitVector r(cx.x().count(k));
        r.set(c);
        m.append_row(std::move(r));
    }
}

// Same, one level down, for the (k-1)-chain dC written in terms of x.
inline void boundary_pairing_rows(const ConstraintContext& cx, int k, std::size_t nu, gf2::Gf2Matrix& m) {
    const auto& x = cx.x();
    Matching mt = cx.space->pairing.at(x, {k - 2, nu});
    for (auto& [a, b] : mt.pairs) m.append_row(star_row(x, k, a) ^ star_row(x, k, b));
    for (auto c : mt.unmatched) m.append_row(star_row(x, k, c));
}

}  // namespace detail

// Rows over the k-simplex coordinates; the nullspace is the set of k-chains
// satisfying the perversity conditions in degree k.
inline gf2::Gf2Matrix compile_constraints(const ConstraintContext& cx, int k) {
    const auto& x = cx.x();
    if (k < 0 || k > x.dim()) throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(k));
    cx.check();
    const auto& p = cx.pp.p;
    const auto& q = cx.pp.q;
    gf2::Gf2Matrix m(0, x.count(k));
    // (A) the chain itself
    for (std::size_t s = 0; s < x.count(k); ++s)
        if (cx.hits({k, s}, k, p)) {
            gf2::BitVector r(x.count(k));
            r.set(s);
            m.append_row(std::move(r));
        }
    if (k >= 1) {
        for (std::size_t rho = 0; rho < x.count(k - 1); ++rho) {
            // (B) its boundary
            if (cx.hits({k - 1, rho}, k - 1, p)) m.append_row(detail::star_row(x, k, rho));
            // (C) its pseudoboundary
            if (cx.hits({k - 1, rho}, k - 1, q)) detail::pairing_rows(cx, k, rho, m);
        }
    }
    if (k >= 2) {
        for (std::size_t nu = 0; nu < x.count(k - 2); ++nu) {
            if (!cx.hits({k - 2, nu}, k - 2, q)) continue;
            if (cx.mode == LooseMode::primary) {
                // (D) pseudoboundary of the boundary
                detail::boundary_pairing_rows(cx, k, nu, m);
            } else {
                // Literal reading bounds the boundary of the pseudoboundary. We
                // keep the pseudoboundary off every face through nu, which is
                // linear and implies the bound.
                for (auto rho : x.cofacets(k - 2, nu)) detail::pairing_rows(cx, k, rho, m);
            }
        }
    }
    return m;
}

inline bool is_allowable(const ConstraintContext& cx, const Chain& c) {
    return (compile_constraints(cx, c.k) * c.cells).none();
}

// Set-based check of the four conditions, straight from the definition.
// Used as an oracle against the compiled matrices.
inline bool satisfies_conditions(const ConstraintContext& cx, const Chain& c) {
    const auto& x = cx.x();
    cx.check();
    const int k = c.k;
    Chain dc = boundary(x, c);
    Chain sc = sigma(x, c, cx.space->pairing);
    Chain sdc = k >= 2 ? sigma(x, dc, cx.space->pairing) : Chain::zero(x, -1);
    Chain dsc = k >= 2 ? boundary(x, sc) : Chain::zero(x, -1);
    for (auto& st : cx.space->s.strata) {
        const int i = st.codim;
        if (i <= 0) continue;
        if (cx.rel && in_mask(*cx.rel, st.cells.front())) {
            // strata inside y impose nothing; a stratum partly inside y is
            // handled cell by cell
            bool all = true;
            for (auto& cell : st.cells) all = all && in_mask(*cx.rel, cell);
            if (all) continue;
        }
        Stratum live = st;
        if (cx.rel) {
            live.cells.clear();
            for (auto& cell : st.cells)
                if (!in_mask(*cx.rel, cell)) live.cells.push_back(cell);
        }
        const int p = cx.pp.p[i], q = cx.pp.q[i];
        // bounds can be negative, so a chain missing the stratum must not be
        // compared through its -1 dimension
        auto over = [&](const Chain& ch, int bound) {
            int d = support_dim_in(x, ch, live);
            return d >= 0 && d > bound;
        };
        if (over(c, k - i + p)) return false;
        if (k >= 1 && over(dc, k - 1 - i + p)) return false;
        if (k >= 1 && over(sc, k - 1 - i + q)) return false;
        if (k >= 2 && over(cx.mode == LooseMode::primary ? sdc : dsc, k - 2 - i + q)) return false;
    }
    return true;
}

}  // namespace rih
