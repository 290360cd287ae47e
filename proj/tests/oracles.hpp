#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra, constraint compiler or engine; complexes and
// filtrations are only read.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rih/space.hpp"

namespace oracle {

// Dense GF(2) rank by textbook elimination on int rows.
inline std::size_t dense_rank(std::vector<std::vector<int>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c])
                for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

// Exhaustive IH over all chains of a small space, straight from the four
// conditions on C, dC, Sigma C and Sigma dC.
class BruteForce {
public:
    explicit BruteForce(const rih::Space& sp) : sp_(sp), n_(sp.x.dim()) {
        for (int k = 0; k <= n_; ++k) {
            cells_.push_back(sp.x.simplices(k));
            std::map<rih::Simplex, std::size_t> idx;
            for (std::size_t i = 0; i < cells_.back().size(); ++i) idx[cells_.back()[i]] = i;
            index_.push_back(std::move(idx));
        }
        // codimension from the filtration level, face by face
        for (int k = 0; k <= n_; ++k) {
            std::vector<int> cd;
            for (std::size_t i = 0; i < cells_[k].size(); ++i) cd.push_back(sp.n() - sp.f.level({k, i}));
            codim_.push_back(std::move(cd));
        }
        // reach_[k][s][i]: largest dimension of a face of the k-simplex s in codim i
        for (int k = 0; k <= n_; ++k) {
            std::vector<std::vector<int>> per;
            for (auto& v : cells_[static_cast<std::size_t>(k)]) {
                std::vector<int> r(static_cast<std::size_t>(sp.n() + 1), none);
                const std::size_t m = v.size();
                for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
                    rih::Simplex f;
                    for (std::size_t j = 0; j < m; ++j)
                        if (sub & (1u << j)) f.push_back(v[j]);
                    int d = static_cast<int>(f.size()) - 1;
                    int c = codim_[static_cast<std::size_t>(d)][index_[static_cast<std::size_t>(d)].at(f)];
                    r[static_cast<std::size_t>(c)] = std::max(r[static_cast<std::size_t>(c)], d);
                }
                per.push_back(std::move(r));
            }
            reach_.push_back(std::move(per));
        }
        // sheets and partners at every face, by scanning
        const auto& explicit_pairs = sp.pairing.entries();
        partner_.resize(static_cast<std::size_t>(n_ + 1));
        sheets_.resize(static_cast<std::size_t>(n_ + 1));
        for (int k = 1; k <= n_; ++k)
            for (std::size_t rho = 0; rho < count(k - 1); ++rho) {
                std::vector<std::size_t> sh;
                const auto& r = cells_[static_cast<std::size_t>(k - 1)][rho];
                for (std::size_t i = 0; i < count(k); ++i) {
                    const auto& s = cells_[static_cast<std::size_t>(k)][i];
                    if (std::includes(s.begin(), s.end(), r.begin(), r.end())) sh.push_back(i);
                }
                std::map<std::size_t, std::size_t> partner;
                auto it = explicit_pairs.find({k - 1, rho});
                if (it != explicit_pairs.end()) {
                    for (auto& [a, b] : it->second) partner[a] = b, partner[b] = a;
                } else if (sh.size() == 2) {
                    partner[sh[0]] = sh[1];
                    partner[sh[1]] = sh[0];
                }
                sheets_[static_cast<std::size_t>(k)].push_back(std::move(sh));
                partner_[static_cast<std::size_t>(k)].push_back(std::move(partner));
            }
    }

    std::size_t count(int k) const { return k < 0 || k > n_ ? 0 : cells_[static_cast<std::size_t>(k)].size(); }

    using Mask = std::vector<char>;

    Mask boundary(int k, const Mask& c) const {
        Mask out(count(k - 1), 0);
        if (k < 1) return out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i]) continue;
            const auto& s = cells_[static_cast<std::size_t>(k)][i];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                rih::Simplex f;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != drop) f.push_back(s[j]);
                out[index_[static_cast<std::size_t>(k - 1)].at(f)] ^= 1;
            }
        }
        return out;
    }

    Mask sigma(int k, const Mask& c) const {
        Mask out(count(k - 1), 0);
        if (k < 1) return out;
        for (std::size_t rho = 0; rho < count(k - 1); ++rho) {
            const auto& partner = partner_[static_cast<std::size_t>(k)][rho];
            bool bad = false;
            for (auto s : sheets_[static_cast<std::size_t>(k)][rho]) {
                if (!c[s]) continue;
                auto p = partner.find(s);
                if (p == partner.end() || !c[p->second]) bad = true;
            }
            out[rho] = bad;
        }
        return out;
    }

    // Largest dimension of a face of the chain's support lying in codim i, or
    // `none` when the support misses that codimension.
    int dim_in_codim(int k, const Mask& c, int i) const {
        int best = none;
        if (k < 0) return best;
        for (std::size_t s = 0; s < c.size(); ++s)
            if (c[s]) best = std::max(best, reach_[static_cast<std::size_t>(k)][s][static_cast<std::size_t>(i)]);
        return best;
    }

    bool allowable(int k, const Mask& c, const std::vector<int>& p, const std::vector<int>& q) const {
        Mask dc = boundary(k, c);
        Mask sc = sigma(k, c);
        Mask sdc = k >= 2 ? sigma(k - 1, dc) : Mask{};
        for (int i = 1; i <= sp_.n(); ++i) {
            if (dim_in_codim(k, c, i) > k - i + p[static_cast<std::size_t>(i)]) return false;
            if (k >= 1 && dim_in_codim(k - 1, dc, i) > k - 1 - i + p[static_cast<std::size_t>(i)]) return false;
            if (k >= 1 && dim_in_codim(k - 1, sc, i) > k - 1 - i + q[static_cast<std::size_t>(i)]) return false;
            if (k >= 2 && dim_in_codim(k - 2, sdc, i) > k - 2 - i + q[static_cast<std::size_t>(i)]) return false;
        }
        return true;
    }

    // Exhaustive: |allowable cycles| / |boundaries of allowable chains|, as
    // powers of two.
    std::vector<std::size_t> ih(const std::vector<int>& p, const std::vector<int>& q, std::size_t max_cells = 14) const {
        for (int k = 0; k <= n_; ++k)
            if (count(k) > max_cells) throw std::length_error("too many cells for brute force");
        std::vector<std::size_t> cycles(static_cast<std::size_t>(n_ + 1), 0);
        std::vector<std::set<Mask>> bds(static_cast<std::size_t>(n_ + 1));
        for (int k = 0; k <= n_; ++k) {
            const std::size_t m = count(k);
            Mask c(m, 0);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
                for (std::size_t j = 0; j < m; ++j) c[j] = (bits >> j) & 1;
                if (!allowable(k, c, p, q)) continue;
                Mask b = boundary(k, c);
                if (std::none_of(b.begin(), b.end(), [](char v) { return v; })) ++cycles[static_cast<std::size_t>(k)];
                if (k >= 1) bds[static_cast<std::size_t>(k - 1)].insert(std::move(b));
            }
        }
        std::vector<std::size_t> out;
        for (int k = 0; k <= n_; ++k) {
            auto& bk = bds[static_cast<std::size_t>(k)];
            if (bk.empty()) bk.insert(Mask(count(k), 0));
            out.push_back(log2_exact(cycles[static_cast<std::size_t>(k)]) - log2_exact(bk.size()));
        }
        return out;
    }

    static constexpr int none = -1000;

private:
    static std::size_t log2_exact(std::size_t v) {
        std::size_t r = 0;
        while ((std::size_t{1} << r) < v) ++r;
        if ((std::size_t{1} << r) != v) throw std::logic_error("set size is not a power of two");
        return r;
    }

    const rih::Space& sp_;
    int n_;
    std::vector<std::vector<rih::Simplex>> cells_;
    std::vector<std::map<rih::Simplex, std::size_t>> index_;
    std::vector<std::vector<int>> codim_;
    std::vector<std::vector<std::vector<int>>> reach_;
    std::vector<std::vector<std::vector<std::size_t>>> sheets_;
    std::vector<std::vector<std::map<std::size_t, std::size_t>>> partner_;
};

// Ordinary GF(2) Betti numbers from dense boundary ranks.
inline std::vector<std::size_t> betti(const rih::SimplicialComplex& x) {
    std::vector<std::size_t> rk(static_cast<std::size_t>(x.dim() + 2), 0);
    for (int k = 1; k <= x.dim(); ++k) {
        std::map<rih::Simplex, std::size_t> idx;
        auto lower = x.simplices(k - 1);
        for (std::size_t i = 0; i < lower.size(); ++i) idx[lower[i]] = i;
        std::vector<std::vector<int>> d(lower.size(), std::vector<int>(x.count(k), 0));
        auto upper = x.simplices(k);
        for (std::size_t j = 0; j < upper.size(); ++j)
            for (std::size_t drop = 0; drop < upper[j].size(); ++drop) {
                rih::Simplex f = upper[j];
                f.erase(f.begin() + static_cast<long>(drop));
                d[idx.at(f)][j] ^= 1;
            }
        rk[static_cast<std::size_t>(k)] = dense_rank(d);
    }
    std::vector<std::size_t> b;
    for (int k = 0; k <= x.dim(); ++k)
        b.push_back(x.count(k) - rk[static_cast<std::size_t>(k)] - rk[static_cast<std::size_t>(k + 1)]);
    return b;
}

}  // namespace oracle
