#pragma once

// GF(2) chains, boundary, sheet pairings and the pseudoboundary, simplicial maps.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rih/error.hpp"
#include "rih/gf2.hpp"
#include "rih/scomplex.hpp"
#include "rih/strat.hpp"

namespace rih {

struct Chain {
    int k = 0;
    gf2::BitVector cells;  // indexed by the k-simplices of the ambient complex

    static Chain zero(const SimplicialComplex& x, int k) {
        return {k, gf2::BitVector(k < 0 ? 0 : x.count(k))};
    }
    static Chain of(const SimplicialComplex& x, int k, const std::vector<std::size_t>& idx) {
        Chain c = zero(x, k);
        for (auto i : idx) c.cells.flip(i);
        return c;
    }
    static Chain of_names(const SimplicialComplex& x, const std::vector<std::vector<std::string>>& simplices) {
        if (simplices.empty()) throw Error(ErrorKind::EmptyInput, "chain given by names needs a simplex");
        int k = static_cast<int>(simplices.front().size()) - 1;
        Chain c = zero(x, k);
        for (auto& s : simplices) {
            auto cell = x.cell_of(s);
            if (cell.k != k) throw Error(ErrorKind::DegreeOutOfRange, "mixed degrees in a chain");
            c.cells.flip(cell.i);
        }
        return c;
    }

    std::vector<std::size_t> support() const { return cells.indices(); }
    bool is_zero() const { return cells.none(); }
    std::size_t size() const { return cells.count(); }

    Chain& operator+=(const Chain& o) {
        if (o.k != k) throw Error(ErrorKind::DegreeOutOfRange, "adding chains of different degree");
        cells ^= o.cells;
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend bool operator==(const Chain&, const Chain&) = default;
};

inline std::string chain_label(const SimplicialComplex& x, const Chain& c) {
    std::vector<std::string> parts;
    for (auto i : c.support()) parts.push_back(x.label(c.k, i));
    return parts.empty() ? "0" : join(parts, "; ");
}

// Rows are (k-1)-simplices, columns k-simplices.
inline gf2::Gf2Matrix boundary_matrix(const SimplicialComplex& x, int k) {
    gf2::Gf2Matrix d(k >= 1 ? x.count(k - 1) : 0, x.count(k));
    if (k >= 1)
        for (std::size_t i = 0; i < x.count(k); ++i)
            for (auto f : x.facets(k, i)) d.set(f, i);
    return d;
}

// A 0-chain has the zero chain of degree -1 as boundary.
inline Chain boundary(const SimplicialComplex& x, const Chain& c) {
    Chain out = Chain::zero(x, c.k - 1);
    if (c.k < 1) return out;
    for (auto i : c.support())
        for (auto f : x.facets(c.k, i)) out.cells.flip(f);
    return out;
}

// Independent route: parity of the Euler characteristic of the link of each
// (k-1)-face inside the subcomplex generated by c.
inline Chain boundary_via_link(const SimplicialComplex& x, const Chain& c) {
    Chain out = Chain::zero(x, c.k - 1);
    if (c.k < 1 || c.is_zero()) return out;
    CellMask m = empty_mask(x);
    for (auto i : c.support()) m[static_cast<std::size_t>(c.k)][i] = 1;
    m = closure(x, m);
    SimplicialComplex gen = subcomplex(x, m);
    for (std::size_t r = 0; r < x.count(c.k - 1); ++r) {
        if (!m[static_cast<std::size_t>(c.k - 1)][r]) continue;
        Simplex local;
        for (auto v : x.simplex(c.k - 1, r)) local.push_back(*gen.vertex_id(x.vertex_name(v)));
        std::sort(local.begin(), local.end());
        if (euler_char(link(gen, local)) % 2 != 0) out.cells.set(r);
    }
    return out;
}

inline int support_dim_in(const SimplicialComplex& x, const Chain& c, const Stratum& s) {
    if (c.k < 0) return -1;
    std::set<CellRef> faces;
    for (auto i : c.support())
        for (auto& f : x.faces(x.simplex(c.k, i))) faces.insert(f);
    int best = -1;
    for (auto& cell : s.cells)
        if (faces.count(cell)) best = std::max(best, cell.k);
    return best;
}

struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unmatched;
};

// Partial matchings of d-simplices around each (d-1)-face. Faces without an
// explicit entry pair their sheets only when there are exactly two of them.
class SheetPairing {
public:
    void set(const SimplicialComplex& x, CellRef face, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
        const int d = face.k + 1;
        if (d > x.dim()) throw Error(ErrorKind::InvalidPairing, "no sheets above a top-dimensional face");
        const auto& inc = x.cofacets(face.k, face.i);
        std::set<std::size_t> used;
        for (auto& [a, b] : pairs) {
            if (a == b) throw Error(ErrorKind::InvalidPairing, "sheet paired with itself at " + x.label(face.k, face.i));
            for (auto s : {a, b}) {
                if (std::find(inc.begin(), inc.end(), s) == inc.end())
                    throw Error(ErrorKind::InvalidPairing,
                                x.label(d, s) + " is not incident to " + x.label(face.k, face.i));
                if (!used.insert(s).second)
                    throw Error(ErrorKind::InvalidPairing,
                                x.label(d, s) + " paired twice at " + x.label(face.k, face.i));
            }
            if (a > b) std::swap(a, b);
        }
        std::sort(pairs.begin(), pairs.end());
        explicit_[face] = std::move(pairs);
    }

    bool has_explicit(CellRef face) const { return explicit_.count(face) > 0; }
    const std::map<CellRef, std::vector<std::pair<std::size_t, std::size_t>>>& entries() const { return explicit_; }

    Matching at(const SimplicialComplex& x, CellRef face) const {
        Matching m;
        const auto& inc = x.cofacets(face.k, face.i);
        auto it = explicit_.find(face);
        if (it == explicit_.end()) {
            if (inc.size() == 2) m.pairs.push_back({inc[0], inc[1]});
            else m.unmatched = inc;
            return m;
        }
        m.pairs = it->second;
        for (auto s : inc) {
            bool hit = false;
            for (auto& [a, b] : m.pairs) hit = hit || a == s || b == s;
            if (!hit) m.unmatched.push_back(s);
        }
        return m;
    }

    friend bool operator==(const SheetPairing&, const SheetPairing&) = default;

private:
    std::map<CellRef, std::vector<std::pair<std::size_t, std::size_t>>> explicit_;
};

// (k-1)-faces where c is not a disjoint union of matched pairs.
inline Chain sigma(const SimplicialComplex& x, const Chain& c, const SheetPairing& p) {
    Chain out = Chain::zero(x, c.k - 1);
    if (c.k < 1) return out;
    std::set<std::size_t> faces;
    for (auto i : c.support())
        for (auto f : x.facets(c.k, i)) faces.insert(f);
    for (auto f : faces) {
        Matching m = p.at(x, {c.k - 1, f});
        bool bad = false;
        for (auto s : m.unmatched) bad = bad || c.cells.get(s);
        for (auto& [a, b] : m.pairs) bad = bad || (c.cells.get(a) != c.cells.get(b));
        if (bad) out.cells.set(f);
    }
    return out;
}

class SimplicialMap {
public:
    SimplicialMap() = default;

    // vmap sends every source vertex name to a target vertex name.
    static SimplicialMap make(std::shared_ptr<const SimplicialComplex> source,
                              std::shared_ptr<const SimplicialComplex> target,
                              const std::map<std::string, std::string>& vmap) {
        SimplicialMap f;
        f.src_ = std::move(source);
        f.tgt_ = std::move(target);
        f.vmap_.assign(f.src_->num_vertices(), -1);
        for (auto& [a, b] : vmap) {
            auto sa = f.src_->vertex_id(a);
            auto tb = f.tgt_->vertex_id(b);
            if (!sa) throw Error(ErrorKind::UnknownVertex, "map source vertex '" + a + "' not in source");
            if (!tb) throw Error(ErrorKind::UnknownVertex, "map target vertex '" + b + "' not in target");
            f.vmap_[static_cast<std::size_t>(*sa)] = *tb;
        }
        for (std::size_t v = 0; v < f.vmap_.size(); ++v)
            if (f.vmap_[v] < 0)
                throw Error(ErrorKind::InvalidMap,
                            "vertex '" + f.src_->vertex_name(static_cast<VertexId>(v)) + "' has no image");
        const auto& s = *f.src_;
        f.image_.resize(static_cast<std::size_t>(s.dim() + 1));
        for (int k = 0; k <= s.dim(); ++k)
            for (std::size_t i = 0; i < s.count(k); ++i) {
                Simplex t;
                for (auto v : s.simplex(k, i)) t.push_back(f.vmap_[static_cast<std::size_t>(v)]);
                std::sort(t.begin(), t.end());
                t.erase(std::unique(t.begin(), t.end()), t.end());
                auto idx = f.tgt_->find(t);
                if (!idx)
                    throw Error(ErrorKind::InvalidMap, "image of " + s.label(k, i) + " is not a simplex of the target");
                f.image_[static_cast<std::size_t>(k)].push_back({static_cast<int>(t.size()) - 1, *idx});
            }
        return f;
    }

    const SimplicialComplex& source() const { return *src_; }
    const SimplicialComplex& target() const { return *tgt_; }
    std::shared_ptr<const SimplicialComplex> source_ptr() const { return src_; }
    std::shared_ptr<const SimplicialComplex> target_ptr() const { return tgt_; }
    VertexId operator()(VertexId v) const { return vmap_[static_cast<std::size_t>(v)]; }
    CellRef image(CellRef c) const { return image_[static_cast<std::size_t>(c.k)][c.i]; }
    bool preserves_dim(CellRef c) const { return image(c).k == c.k; }

private:
    std::shared_ptr<const SimplicialComplex> src_, tgt_;
    std::vector<VertexId> vmap_;
    std::vector<std::vector<CellRef>> image_;
};

inline Chain pushforward(const SimplicialMap& f, const Chain& c) {
    Chain out = Chain::zero(f.target(), c.k);
    if (c.k > f.target().dim()) return out;
    for (auto i : c.support()) {
        CellRef t = f.image({c.k, i});
        if (t.k == c.k) out.cells.flip(t.i);
    }
    return out;
}

// Union of the closed images of the given cells.
inline CellMask image_closure(const SimplicialMap& f, const std::vector<CellRef>& cells) {
    CellMask m = empty_mask(f.target());
    for (auto& c : cells) {
        CellRef t = f.image(c);
        m[static_cast<std::size_t>(t.k)][t.i] = 1;
    }
    return closure(f.target(), m);
}

inline std::vector<CellRef> cells_of(const Chain& c) {
    std::vector<CellRef> out;
    for (auto i : c.support()) out.push_back({c.k, i});
    return out;
}

}  // namespace rih
