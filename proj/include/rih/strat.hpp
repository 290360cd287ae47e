#pragma once

// Filtrations by subcomplexes and the strata they cut out.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rih/error.hpp"
#include "rih/scomplex.hpp"

namespace rih {

// X_0 ⊆ ... ⊆ X_n = x, stored as the first level at which each cell appears.
class Filtration {
public:
    Filtration() = default;

    static Filtration trivial(const SimplicialComplex& x) {
        Filtration f;
        f.n_ = x.dim();
        f.level_.resize(static_cast<std::size_t>(x.dim() + 1));
        for (int k = 0; k <= x.dim(); ++k) f.level_[static_cast<std::size_t>(k)].assign(x.count(k), f.n_);
        return f;
    }

    // skeleta[j] generates X_j for j < n; a missing entry means X_j = X_{j-1}.
    static Filtration from_skeleta(const SimplicialComplex& x, int n,
                                   const std::map<int, std::vector<CellRef>>& skeleta) {
        if (n < x.dim()) throw Error(ErrorKind::MalformedFiltration, "declared dimension below complex dimension");
        Filtration f;
        f.n_ = n;
        f.level_.resize(static_cast<std::size_t>(x.dim() + 1));
        for (int k = 0; k <= x.dim(); ++k) f.level_[static_cast<std::size_t>(k)].assign(x.count(k), n);
        std::optional<CellMask> prev;
        for (int j = 0; j < n; ++j) {
            auto it = skeleta.find(j);
            if (it == skeleta.end()) continue;
            CellMask m = empty_mask(x);
            for (auto& c : it->second) m[static_cast<std::size_t>(c.k)][c.i] = 1;
            m = closure(x, m);
            if (prev) {
                for (int k = 0; k <= x.dim(); ++k)
                    for (std::size_t i = 0; i < x.count(k); ++i)
                        if ((*prev)[static_cast<std::size_t>(k)][i] && !m[static_cast<std::size_t>(k)][i])
                            throw Error(ErrorKind::NonNestedSkeleton,
                                        "skeleton " + std::to_string(j) + " misses " + x.label(k, i) +
                                            " from a lower skeleton");
            }
            for (int k = 0; k <= x.dim(); ++k)
                for (std::size_t i = 0; i < x.count(k); ++i)
                    if (m[static_cast<std::size_t>(k)][i]) {
                        if (k > j)
                            throw Error(ErrorKind::MalformedFiltration,
                                        "skeleton " + std::to_string(j) + " contains the " +
                                            std::to_string(k) + "-simplex " + x.label(k, i));
                        auto& l = f.level_[static_cast<std::size_t>(k)][i];
                        l = std::min(l, j);
                    }
            prev = std::move(m);
        }
        return f;
    }

    static Filtration from_levels(const SimplicialComplex& x, int n, std::vector<std::vector<int>> level) {
        Filtration f;
        f.n_ = n;
        f.level_ = std::move(level);
        f.validate(x);
        return f;
    }

    int n() const { return n_; }
    int level(CellRef c) const { return level_[static_cast<std::size_t>(c.k)][c.i]; }
    const std::vector<std::vector<int>>& levels() const { return level_; }

    // X_j as a cell mask.
    CellMask skeleton(int j) const {
        CellMask m;
        for (auto& row : level_) {
            m.emplace_back(row.size(), 0);
            for (std::size_t i = 0; i < row.size(); ++i) m.back()[i] = row[i] <= j;
        }
        return m;
    }

    void validate(const SimplicialComplex& x) const {
        if (level_.size() != static_cast<std::size_t>(x.dim() + 1))
            throw Error(ErrorKind::MismatchedComplex, "filtration built for another complex");
        for (int k = 0; k <= x.dim(); ++k) {
            if (level_[static_cast<std::size_t>(k)].size() != x.count(k))
                throw Error(ErrorKind::MismatchedComplex, "filtration built for another complex");
            for (std::size_t i = 0; i < x.count(k); ++i) {
                int l = level_[static_cast<std::size_t>(k)][i];
                if (l < k || l > n_)
                    throw Error(ErrorKind::MalformedFiltration, "simplex " + x.label(k, i) + " sits at level " +
                                                                    std::to_string(l));
                if (k > 0)
                    for (auto fi : x.facets(k, i))
                        if (level_[static_cast<std::size_t>(k - 1)][fi] > l)
                            throw Error(ErrorKind::MalformedFiltration,
                                        "skeleton not closed at " + x.label(k, i));
            }
        }
    }

    friend bool operator==(const Filtration&, const Filtration&) = default;

private:
    int n_ = -1;
    std::vector<std::vector<int>> level_;
};

struct Stratum {
    int id = 0;
    int dim = 0;
    int codim = 0;
    std::vector<CellRef> cells;  // open simplices
};

struct Stratification {
    int n = 0;
    std::vector<Stratum> strata;
    std::vector<std::vector<int>> stratum_of;  // [k][i] -> stratum id

    int stratum(CellRef c) const { return stratum_of[static_cast<std::size_t>(c.k)][c.i]; }
    int codim(CellRef c) const { return strata[static_cast<std::size_t>(stratum(c))].codim; }
};

namespace detail {
struct UnionFind {
    std::vector<std::size_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

inline std::vector<std::size_t> cell_offsets(const SimplicialComplex& x) {
    std::vector<std::size_t> off(static_cast<std::size_t>(x.dim() + 2), 0);
    for (int k = 0; k <= x.dim(); ++k)
        off[static_cast<std::size_t>(k + 1)] = off[static_cast<std::size_t>(k)] + x.count(k);
    return off;
}
}  // namespace detail

// Components of X_j \ X_{j-1}, adjacency by the face relation.
inline Stratification strata(const SimplicialComplex& x, const Filtration& f) {
    f.validate(x);
    auto off = detail::cell_offsets(x);
    detail::UnionFind uf(off.back());
    for (int k = 1; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i)
            for (auto fi : x.facets(k, i))
                if (f.level({k - 1, fi}) == f.level({k, i}))
                    uf.unite(off[static_cast<std::size_t>(k)] + i, off[static_cast<std::size_t>(k - 1)] + fi);
    Stratification s;
    s.n = f.n();
    s.stratum_of.resize(static_cast<std::size_t>(x.dim() + 1));
    std::map<std::size_t, int> root_id;
    // ids follow (level, first cell) order for stable output
    std::vector<std::pair<int, std::size_t>> order;
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i)
            order.push_back({f.level({k, i}), off[static_cast<std::size_t>(k)] + i});
    std::stable_sort(order.begin(), order.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    for (auto& [lvl, flat] : order) {
        auto r = uf.find(flat);
        if (!root_id.count(r)) {
            int id = static_cast<int>(s.strata.size());
            root_id[r] = id;
            s.strata.push_back({id, lvl, f.n() - lvl, {}});
        }
    }
    for (int k = 0; k <= x.dim(); ++k) {
        s.stratum_of[static_cast<std::size_t>(k)].resize(x.count(k));
        for (std::size_t i = 0; i < x.count(k); ++i) {
            int id = root_id[uf.find(off[static_cast<std::size_t>(k)] + i)];
            s.stratum_of[static_cast<std::size_t>(k)][i] = id;
            s.strata[static_cast<std::size_t>(id)].cells.push_back({k, i});
        }
    }
    return s;
}

struct FrontierReport {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;  // (S1, S2): S1 meets cl(S2) but is not inside it
};

inline FrontierReport check_frontier(const SimplicialComplex& x, const Filtration& f) {
    Stratification s = strata(x, f);
    FrontierReport rep;
    for (auto& s2 : s.strata) {
        CellMask m = empty_mask(x);
        for (auto& c : s2.cells) m[static_cast<std::size_t>(c.k)][c.i] = 1;
        m = closure(x, m);
        for (auto& s1 : s.strata) {
            if (s1.id == s2.id) continue;
            std::size_t hit = 0;
            for (auto& c : s1.cells) hit += in_mask(m, c) ? 1 : 0;
            if (hit > 0 && hit < s1.cells.size()) {
                rep.ok = false;
                rep.violations.push_back({s1.id, s2.id});
            }
        }
    }
    return rep;
}

inline bool refines(const SimplicialComplex& x, const Filtration& f1, const Filtration& f2) {
    if (f1.levels().size() != f2.levels().size() || f1.n() != f2.n())
        throw Error(ErrorKind::MismatchedComplex, "filtrations of different complexes");
    Stratification s1 = strata(x, f1), s2 = strata(x, f2);
    for (auto& st : s1.strata) {
        int target = s2.stratum(st.cells.front());
        for (auto& c : st.cells)
            if (s2.stratum(c) != target) return false;
    }
    return true;
}

inline Filtration common_refinement(const SimplicialComplex& x, const Filtration& f1, const Filtration& f2) {
    if (f1.levels().size() != f2.levels().size() || f1.n() != f2.n())
        throw Error(ErrorKind::MismatchedComplex, "filtrations of different complexes");
    f1.validate(x);
    f2.validate(x);
    const int n = f1.n();
    // dim(X_a ∩ X'_b) for every (a, b)
    std::vector<std::vector<int>> dim_ab(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), -1));
    for (int k = 0; k <= x.dim(); ++k)
        for (std::size_t i = 0; i < x.count(k); ++i) {
            int a0 = f1.level({k, i}), b0 = f2.level({k, i});
            for (int a = a0; a <= n; ++a)
                for (int b = b0; b <= n; ++b) {
                    auto& d = dim_ab[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    d = std::max(d, k);
                }
        }
    std::vector<std::vector<int>> lvl(static_cast<std::size_t>(x.dim() + 1));
    for (int k = 0; k <= x.dim(); ++k) {
        lvl[static_cast<std::size_t>(k)].resize(x.count(k));
        for (std::size_t i = 0; i < x.count(k); ++i)
            lvl[static_cast<std::size_t>(k)][i] =
                dim_ab[static_cast<std::size_t>(f1.level({k, i}))][static_cast<std::size_t>(f2.level({k, i}))];
    }
    // Lower any face whose stratum would straddle input strata, then re-close.
    Stratification s1 = strata(x, f1), s2 = strata(x, f2);
    auto label = [&](CellRef c) { return std::pair{s1.stratum(c), s2.stratum(c)}; };
    for (bool changed = true; changed;) {
        changed = false;
        for (int k = x.dim(); k >= 1; --k)
            for (std::size_t i = 0; i < x.count(k); ++i)
                for (auto fi : x.facets(k, i)) {
                    int& lf = lvl[static_cast<std::size_t>(k - 1)][fi];
                    int ls = lvl[static_cast<std::size_t>(k)][i];
                    if (lf > ls) {
                        lf = ls;
                        changed = true;
                    }
                    if (lf == ls && label({k - 1, fi}) != label({k, i})) {
                        lf = ls - 1;
                        changed = true;
                    }
                }
    }
    return Filtration::from_levels(x, n, std::move(lvl));
}

}  // namespace rih
