#pragma once

// Exact linear algebra over GF(2) with bit-packed rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rih/error.hpp"

namespace rih::gf2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
        BitVector v(n);
        for (auto i : idx) v.flip(i);
        return v;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b = true) {
        if (b) w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    BitVector& operator^=(const BitVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    BitVector& operator&=(const BitVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVector& operator|=(const BitVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    bool any() const {
        return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
    }
    bool none() const { return !any(); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    // parity of the dot product
    bool dot(const BitVector& o) const {
        check_same(o);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= (w_[i] & o.w_[i]);
        return std::popcount(acc) & 1;
    }
    bool subset_of(const BitVector& o) const {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // npos when empty
    std::size_t lowest() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return npos;
    }
    std::size_t highest() const {
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w_[i]));
        return npos;
    }
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    // Compares as binary numbers with the highest index most significant.
    friend bool colex_less(const BitVector& a, const BitVector& b) {
        a.check_same(b);
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    void check_same(const BitVector& o) const {
        if (o.n_ != n_) throw Error(ErrorKind::LengthMismatch, "bit vectors of different length");
    }
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, BitVector(cols)) {}

    static Gf2Matrix identity(std::size_t n) {
        Gf2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }
    static Gf2Matrix from_rows(std::size_t cols, std::vector<BitVector> rows) {
        Gf2Matrix m(0, cols);
        for (auto& r : rows) m.append_row(std::move(r));
        return m;
    }
    static Gf2Matrix from_dense(const std::vector<std::vector<int>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Gf2Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(ErrorKind::LengthMismatch, "ragged dense matrix");
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j] & 1);
        }
        return m;
    }

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b = true) { r_[i].set(j, b); }
    void flip(std::size_t i, std::size_t j) { r_[i].flip(j); }
    const BitVector& row(std::size_t i) const { return r_[i]; }
    const std::vector<BitVector>& row_list() const { return r_; }

    void append_row(BitVector v) {
        if (v.size() != cols_) throw Error(ErrorKind::LengthMismatch, "row length differs from column count");
        r_.push_back(std::move(v));
    }
    void append_rows(const Gf2Matrix& o) {
        if (o.cols_ != cols_) throw Error(ErrorKind::LengthMismatch, "stacking matrices with different widths");
        r_.insert(r_.end(), o.r_.begin(), o.r_.end());
    }

    BitVector operator*(const BitVector& x) const {
        if (x.size() != cols_) throw Error(ErrorKind::LengthMismatch, "matrix-vector size mismatch");
        BitVector y(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            if (r_[i].dot(x)) y.set(i);
        return y;
    }
    Gf2Matrix operator*(const Gf2Matrix& b) const {
        if (b.rows() != cols_) throw Error(ErrorKind::LengthMismatch, "matrix product size mismatch");
        Gf2Matrix c(rows(), b.cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto j : r_[i].indices()) c.r_[i] ^= b.r_[j];
        return c;
    }
    Gf2Matrix& operator+=(const Gf2Matrix& b) {
        if (b.rows() != rows() || b.cols_ != cols_) throw Error(ErrorKind::LengthMismatch, "matrix sum size mismatch");
        for (std::size_t i = 0; i < rows(); ++i) r_[i] ^= b.r_[i];
        return *this;
    }
    friend Gf2Matrix operator+(Gf2Matrix a, const Gf2Matrix& b) { return a += b; }
    Gf2Matrix transpose() const {
        Gf2Matrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto j : r_[i].indices()) t.set(j, i);
        return t;
    }

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> r_;
};

enum class PivotOrder { lowest, highest };

// Fully reduced row echelon basis, grown one vector at a time.
class Echelon {
public:
    explicit Echelon(std::size_t ambient = 0, PivotOrder order = PivotOrder::lowest)
        : n_(ambient), order_(order) {}

    std::size_t ambient_dim() const { return n_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(piv_[i])) v ^= rows_[i];
        return v;
    }
    bool contains(const BitVector& v) const { return reduce(v).none(); }

    // Returns false when v already lies in the span.
    bool insert(const BitVector& v) {
        BitVector r = reduce(v);
        if (r.none()) return false;
        std::size_t p = order_ == PivotOrder::lowest ? r.lowest() : r.highest();
        for (auto& row : rows_)
            if (row.get(p)) row ^= r;
        rows_.push_back(std::move(r));
        piv_.push_back(p);
        return true;
    }

private:
    std::size_t n_;
    PivotOrder order_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> piv_;
};

struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<BitVector> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const BitVector& v) const {
        Echelon e(ambient_dim);
        for (auto& b : basis) e.insert(b);
        return e.contains(v);
    }
};

// Independent basis of span(vs); input order decides which vectors survive.
inline Subspace span_of(std::size_t ambient, const std::vector<BitVector>& vs) {
    Subspace s{ambient, {}};
    Echelon e(ambient);
    for (auto& v : vs)
        if (e.insert(v)) s.basis.push_back(v);
    return s;
}

inline std::size_t rank(const Gf2Matrix& m) {
    Echelon e(m.cols());
    std::size_t r = 0;
    for (auto& row : m.row_list()) r += e.insert(row) ? 1 : 0;
    return r;
}

inline Subspace nullspace(const Gf2Matrix& m) {
    Echelon e(m.cols());
    for (auto& row : m.row_list()) e.insert(row);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto p : e.pivots()) is_pivot[p] = 1;
    Subspace out{m.cols(), {}};
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        // each reduced row reads x_pivot + (free entries) = 0
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e.rows()[i].get(f)) v.set(e.pivots()[i]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

inline std::optional<BitVector> solve(const Gf2Matrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::LengthMismatch, "right-hand side length differs from row count");
    const std::size_t n = m.cols();
    // augmented rows [row | b_i], eliminated on the first n columns
    Echelon e(n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BitVector r(n + 1);
        for (auto j : m.row(i).indices()) r.set(j);
        if (b.get(i)) r.set(n);
        e.insert(r);
    }
    BitVector x(n);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.pivots()[i] == n) return std::nullopt;
        if (e.rows()[i].get(n)) x.set(e.pivots()[i]);
    }
    return x;
}

inline std::size_t quotient_dim(const Subspace& v, const Subspace& w) {
    if (v.ambient_dim != w.ambient_dim)
        throw Error(ErrorKind::LengthMismatch, "subspaces live in different ambient spaces");
    Echelon e(v.ambient_dim);
    for (auto& b : v.basis) e.insert(b);
    for (auto& b : w.basis)
        if (!e.contains(b)) throw Error(ErrorKind::NotContained, "subspace is not contained in the larger one");
    return v.dim() - w.dim();
}

}  // namespace rih::gf2
