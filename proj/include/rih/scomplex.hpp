#pragma once

// Finite abstract simplicial complexes with string vertex names.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rih/error.hpp"

namespace rih {

using VertexId = std::int32_t;

// Sorted, distinct vertex ids of one complex.
using Simplex = std::vector<VertexId>;

struct CellRef {
    int k = 0;
    std::size_t i = 0;
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

// Digit runs compare numerically so "v10" sorts after "v9".
inline bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
            auto strip = [](std::string& s) {
                std::size_t z = s.find_first_not_of('0');
                s = z == std::string::npos ? "0" : s.substr(z);
            };
            std::string ra = na, rb = nb;
            strip(ra);
            strip(rb);
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            if (na.size() != nb.size()) return na.size() < nb.size();
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Downward closure of the given simplices. Vertex ids follow the natural
    // order of the names, so two builds from the same data agree exactly.
    static SimplicialComplex build(const std::vector<std::string>& names,
                                   const std::vector<std::vector<std::size_t>>& simplices) {
        SimplicialComplex x;
        std::vector<std::size_t> order(names.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return natural_less(names[a], names[b]); });
        std::vector<VertexId> remap(names.size(), -1);
        for (std::size_t r = 0; r < order.size(); ++r) {
            if (r > 0 && names[order[r]] == names[order[r - 1]]) {
                remap[order[r]] = remap[order[r - 1]];
                continue;
            }
            remap[order[r]] = static_cast<VertexId>(x.names_.size());
            x.names_.push_back(names[order[r]]);
        }
        for (std::size_t i = 0; i < x.names_.size(); ++i) x.ids_[x.names_[i]] = static_cast<VertexId>(i);

        std::vector<std::set<Simplex>> cells;
        for (const auto& s : simplices) {
            Simplex t;
            for (auto v : s) t.push_back(remap.at(v));
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            if (t.empty()) continue;
            add_closure(t, cells);
        }
        x.finish(cells);
        return x;
    }

    static SimplicialComplex from_maximal(const std::vector<std::vector<std::string>>& maximal,
                                          std::vector<std::string>* warnings = nullptr) {
        if (maximal.empty()) throw Error(ErrorKind::EmptyInput, "no maximal simplices given");
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> at;
        std::vector<std::vector<std::size_t>> simp;
        std::set<std::set<std::string>> seen;
        for (const auto& s : maximal) {
            if (s.empty()) throw Error(ErrorKind::EmptyInput, "empty simplex in maximal list");
            std::set<std::string> key(s.begin(), s.end());
            if (key.size() != s.size()) throw Error(ErrorKind::NotASimplex, "repeated vertex in simplex");
            if (!seen.insert(key).second) {
                if (warnings) warnings->push_back("duplicate simplex dropped: " + join(s, ","));
                continue;
            }
            std::vector<std::size_t> idx;
            for (auto& v : s) {
                auto [it, fresh] = at.try_emplace(v, names.size());
                if (fresh) names.push_back(v);
                idx.push_back(it->second);
            }
            simp.push_back(std::move(idx));
        }
        if (warnings) {
            for (const auto& a : seen)
                for (const auto& b : seen)
                    if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                        warnings->push_back("simplex " + join({a.begin(), a.end()}, ",") +
                                            " is a face of another listed simplex");
                        break;
                    }
        }
        return build(names, simp);
    }

    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    bool empty() const { return cells_.empty(); }
    std::size_t count(int k) const {
        return (k < 0 || k > dim()) ? 0 : cells_[static_cast<std::size_t>(k)].size();
    }
    std::size_t num_vertices() const { return names_.size(); }
    const Simplex& simplex(int k, std::size_t i) const { return cells_[static_cast<std::size_t>(k)][i]; }
    const Simplex& simplex(CellRef c) const { return simplex(c.k, c.i); }
    const std::vector<Simplex>& simplices(int k) const { return cells_[static_cast<std::size_t>(k)]; }

    std::optional<std::size_t> find(const Simplex& s) const {
        int k = static_cast<int>(s.size()) - 1;
        if (k < 0 || k > dim()) return std::nullopt;
        const auto& row = cells_[static_cast<std::size_t>(k)];
        auto it = std::lower_bound(row.begin(), row.end(), s);
        if (it == row.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - row.begin());
    }
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    const std::string& vertex_name(VertexId v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    std::optional<VertexId> vertex_id(const std::string& name) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    // Throws UnknownVertex or NotASimplex.
    Simplex simplex_of(const std::vector<std::string>& vs) const {
        Simplex s;
        for (auto& n : vs) {
            auto id = vertex_id(n);
            if (!id) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + n + "'");
            s.push_back(*id);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorKind::NotASimplex, "repeated vertex in " + join(vs, ","));
        if (!contains(s)) throw Error(ErrorKind::NotASimplex, join(vs, ",") + " is not a simplex");
        return s;
    }
    CellRef cell_of(const std::vector<std::string>& vs) const {
        Simplex s = simplex_of(vs);
        return {static_cast<int>(s.size()) - 1, *find(s)};
    }

    std::vector<std::string> names_of(const Simplex& s) const {
        std::vector<std::string> out;
        for (auto v : s) out.push_back(vertex_name(v));
        return out;
    }
    std::string label(const Simplex& s) const { return join(names_of(s), ","); }
    std::string label(int k, std::size_t i) const { return label(simplex(k, i)); }

    // (k-1)-faces of a k-simplex, in order of the omitted vertex.
    const std::vector<std::size_t>& facets(int k, std::size_t i) const {
        return facets_[static_cast<std::size_t>(k)][i];
    }
    // (k+1)-simplices containing a k-simplex.
    const std::vector<std::size_t>& cofacets(int k, std::size_t i) const {
        return cofacets_[static_cast<std::size_t>(k)][i];
    }

    // All nonempty faces of a simplex of this complex, itself included.
    std::vector<CellRef> faces(const Simplex& s) const {
        std::vector<CellRef> out;
        const std::size_t m = s.size();
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            Simplex t;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (1u << b)) t.push_back(s[b]);
            out.push_back({static_cast<int>(t.size()) - 1, *find(t)});
        }
        return out;
    }

    std::size_t total_cells() const {
        std::size_t t = 0;
        for (auto& r : cells_) t += r.size();
        return t;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.names_ == b.names_ && a.cells_ == b.cells_;
    }

private:
    static void add_closure(const Simplex& t, std::vector<std::set<Simplex>>& cells) {
        std::size_t k = t.size() - 1;
        if (cells.size() <= k) cells.resize(k + 1);
        if (!cells[k].insert(t).second) return;
        if (t.size() == 1) return;
        for (std::size_t drop = 0; drop < t.size(); ++drop) {
            Simplex f;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (j != drop) f.push_back(t[j]);
            add_closure(f, cells);
        }
    }

    void finish(const std::vector<std::set<Simplex>>& cells) {
        cells_.clear();
        for (auto& s : cells) cells_.emplace_back(s.begin(), s.end());
        facets_.assign(cells_.size(), {});
        cofacets_.assign(cells_.size(), {});
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            facets_[k].assign(cells_[k].size(), {});
            cofacets_[k].assign(cells_[k].size(), {});
        }
        for (std::size_t k = 1; k < cells_.size(); ++k) {
            for (std::size_t i = 0; i < cells_[k].size(); ++i) {
                const Simplex& s = cells_[k][i];
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Simplex f;
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != drop) f.push_back(s[j]);
                    std::size_t fi = *find(f);
                    facets_[k][i].push_back(fi);
                    cofacets_[k - 1][fi].push_back(i);
                }
            }
        }
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> ids_;
    std::vector<std::vector<Simplex>> cells_;
    std::vector<std::vector<std::vector<std::size_t>>> facets_;
    std::vector<std::vector<std::vector<std::size_t>>> cofacets_;
};

// Per-cell membership flags, indexed [k][i].
using CellMask = std::vector<std::vector<char>>;

inline CellMask empty_mask(const SimplicialComplex& x) {
    CellMask m(static_cast<std::size_t>(x.dim() + 1));
    for (int k = 0; k <= x.dim(); ++k) m[static_cast<std::size_t>(k)].assign(x.count(k), 0);
    return m;
}
inline CellMask full_mask(const SimplicialComplex& x) {
    CellMask m = empty_mask(x);
    for (auto& r : m) std::fill(r.begin(), r.end(), 1);
    return m;
}
inline bool in_mask(const CellMask& m, CellRef c) {
    return static_cast<std::size_t>(c.k) < m.size() && m[static_cast<std::size_t>(c.k)][c.i];
}
inline CellMask complement(const CellMask& m) {
    CellMask out = m;
    for (auto& r : out)
        for (auto& b : r) b = !b;
    return out;
}
inline bool mask_is_closed(const SimplicialComplex& x, const CellMask& m) {
    for (int k = 1; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i)
            if (m[static_cast<std::size_t>(k)][i])
                for (auto f : x.facets(k, i))
                    if (!m[static_cast<std::size_t>(k - 1)][f]) return false;
    return true;
}
// Smallest subcomplex containing the flagged cells.
inline CellMask closure(const SimplicialComplex& x, CellMask m) {
    for (int k = x.dim(); k >= 1; --k)
        for (std::size_t i = 0; i < x.count(k); ++i)
            if (m[static_cast<std::size_t>(k)][i])
                for (auto f : x.facets(k, i)) m[static_cast<std::size_t>(k - 1)][f] = 1;
    return m;
}
// Cells having some vertex in the flagged set of vertices: the open star.
inline CellMask open_star(const SimplicialComplex& x, const std::vector<VertexId>& vs) {
    CellMask m = empty_mask(x);
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i)
            for (auto v : x.simplex(k, i))
                if (std::find(vs.begin(), vs.end(), v) != vs.end()) m[static_cast<std::size_t>(k)][i] = 1;
    return m;
}

// The flagged cells as a complex of their own (must be closed).
inline SimplicialComplex subcomplex(const SimplicialComplex& x, const CellMask& m) {
    std::vector<std::vector<std::size_t>> simp;
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i)
            if (m[static_cast<std::size_t>(k)][i]) {
                std::vector<std::size_t> s;
                for (auto v : x.simplex(k, i)) s.push_back(static_cast<std::size_t>(v));
                simp.push_back(std::move(s));
            }
    // keep only used vertex names so ids stay dense
    std::vector<std::string> names;
    std::map<std::size_t, std::size_t> used;
    for (auto& s : simp)
        for (auto& v : s) {
            auto [it, fresh] = used.try_emplace(v, names.size());
            if (fresh) names.push_back(x.vertex_name(static_cast<VertexId>(v)));
            v = it->second;
        }
    return SimplicialComplex::build(names, simp);
}

inline SimplicialComplex link(const SimplicialComplex& x, const Simplex& s) {
    if (!x.contains(s)) throw Error(ErrorKind::NotASimplex, "link of a simplex not in the complex");
    std::vector<std::vector<std::size_t>> simp;
    std::vector<std::string> names;
    std::map<VertexId, std::size_t> used;
    int k = static_cast<int>(s.size()) - 1;
    // maximal elements of the link come from cofaces; closing those is enough
    for (int d = k + 1; d <= x.dim(); ++d)
        for (std::size_t i = 0; i < x.count(d); ++i) {
            const Simplex& t = x.simplex(d, i);
            if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
            std::vector<std::size_t> rest;
            for (auto v : t)
                if (!std::binary_search(s.begin(), s.end(), v)) {
                    auto [it, fresh] = used.try_emplace(v, names.size());
                    if (fresh) names.push_back(x.vertex_name(v));
                    rest.push_back(it->second);
                }
            simp.push_back(std::move(rest));
        }
    return SimplicialComplex::build(names, simp);
}

inline long euler_char(const SimplicialComplex& x) {
    long chi = 0;
    for (int k = 0; k <= x.dim(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(x.count(k));
    return chi;
}

inline SimplicialComplex cone(const SimplicialComplex& x, const std::string& apex) {
    if (x.vertex_id(apex)) throw Error(ErrorKind::ApexCollision, "apex '" + apex + "' is already a vertex");
    std::vector<std::string> names = x.vertex_names();
    names.push_back(apex);
    std::size_t a = names.size() - 1;
    std::vector<std::vector<std::size_t>> simp{{a}};
    for (int k = 0; k <= x.dim(); ++k)
        for (auto& s : x.simplices(k)) {
            std::vector<std::size_t> t(s.begin(), s.end());
            t.push_back(a);
            simp.push_back(std::move(t));
        }
    return SimplicialComplex::build(names, simp);
}

inline SimplicialComplex suspension(const SimplicialComplex& x, const std::string& north,
                                    const std::string& south) {
    if (north == south) throw Error(ErrorKind::ApexCollision, "suspension apexes must differ");
    SimplicialComplex top = cone(x, north);
    SimplicialComplex bottom = cone(x, south);
    std::vector<std::string> names = top.vertex_names();
    names.push_back(south);
    std::vector<std::vector<std::size_t>> simp;
    auto add_all = [&](const SimplicialComplex& c) {
        for (int k = 0; k <= c.dim(); ++k)
            for (auto& s : c.simplices(k)) {
                std::vector<std::size_t> t;
                for (auto v : s) {
                    const auto& nm = c.vertex_name(v);
                    t.push_back(static_cast<std::size_t>(
                        std::find(names.begin(), names.end(), nm) - names.begin()));
                }
                simp.push_back(std::move(t));
            }
    };
    add_all(top);
    add_all(bottom);
    return SimplicialComplex::build(names, simp);
}

// First barycentric subdivision. Vertex "[a.b.c]" is the barycenter of the
// base simplex {a,b,c}; a subdivision simplex is a flag s_0 < s_1 < ... .
struct Subdivision {
    SimplicialComplex complex;
    std::vector<CellRef> vertex_cell;               // sd vertex -> base cell
    std::vector<std::vector<CellRef>> carrier;      // sd cell -> smallest base cell containing it
    std::vector<std::vector<CellRef>> min_cell;     // sd cell -> first element of its flag
    std::map<CellRef, VertexId> barycenter;         // base cell -> sd vertex

    // The flag of base cells spanned by an sd cell, ordered by dimension.
    std::vector<CellRef> flag(int k, std::size_t i) const {
        std::vector<CellRef> f;
        for (auto v : complex.simplex(k, i)) f.push_back(vertex_cell[static_cast<std::size_t>(v)]);
        std::sort(f.begin(), f.end(), [](const CellRef& a, const CellRef& b) { return a.k < b.k; });
        return f;
    }
};

inline std::string barycenter_name(const SimplicialComplex& x, const Simplex& s) {
    return "[" + join(x.names_of(s), ".") + "]";
}

inline Subdivision barycentric(const SimplicialComplex& x) {
    std::vector<std::string> names;
    std::vector<CellRef> cells;
    std::map<CellRef, std::size_t> at;
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i) {
            at[{k, i}] = names.size();
            names.push_back(barycenter_name(x, x.simplex(k, i)));
            cells.push_back({k, i});
        }
    // flags ending at each cell, built upward by dimension
    std::map<CellRef, std::vector<std::vector<std::size_t>>> flags;
    std::vector<std::vector<std::size_t>> all;
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i) {
            std::vector<std::vector<std::size_t>> mine{{at[{k, i}]}};
            if (k > 0)
                for (auto& f : x.faces(x.simplex(k, i))) {
                    if (f.k == k) continue;
                    for (auto fl : flags[f]) {
                        fl.push_back(at[{k, i}]);
                        mine.push_back(std::move(fl));
                    }
                }
            for (auto& fl : mine) all.push_back(fl);
            flags[{k, i}] = std::move(mine);
        }
    Subdivision sd;
    sd.complex = SimplicialComplex::build(names, all);
    const auto& c = sd.complex;
    sd.vertex_cell.resize(c.num_vertices());
    for (std::size_t n = 0; n < names.size(); ++n) {
        VertexId v = *c.vertex_id(names[n]);
        sd.vertex_cell[static_cast<std::size_t>(v)] = cells[n];
        sd.barycenter[cells[n]] = v;
    }
    sd.carrier.assign(static_cast<std::size_t>(c.dim() + 1), {});
    sd.min_cell.assign(static_cast<std::size_t>(c.dim() + 1), {});
    for (int k = 0; k <= c.dim(); ++k)
        for (std::size_t i = 0; i < c.count(k); ++i) {
            auto f = sd.flag(k, i);
            sd.carrier[static_cast<std::size_t>(k)].push_back(f.back());
            sd.min_cell[static_cast<std::size_t>(k)].push_back(f.front());
        }
    return sd;
}

struct DualBlockDecomposition {
    SimplicialComplex base;
    Subdivision sd;
    std::map<CellRef, std::vector<CellRef>> block_of;  // base cell -> sd cells of its open block

    // sd cells of top dimension n - k inside the block of a k-cell
    std::vector<CellRef> top_cells(CellRef c) const {
        std::vector<CellRef> out;
        int n = base.dim();
        for (auto& s : block_of.at(c))
            if (s.k == n - c.k) out.push_back(s);
        return out;
    }
};

inline bool is_pure(const SimplicialComplex& x) {
    for (int k = 0; k < x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i)
            if (x.cofacets(k, i).empty()) return false;
    return true;
}

inline DualBlockDecomposition dual_blocks(const SimplicialComplex& x) {
    if (!is_pure(x)) throw Error(ErrorKind::NotPure, "dual blocks need a pure complex");
    DualBlockDecomposition d{x, barycentric(x), {}};
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i) d.block_of[{k, i}];
    const auto& c = d.sd.complex;
    for (int k = 0; k <= c.dim(); ++k)
        for (std::size_t i = 0; i < c.count(k); ++i)
            d.block_of[d.sd.min_cell[static_cast<std::size_t>(k)][i]].push_back({k, i});
    return d;
}

}  // namespace rih
