#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contact/error.hpp"

namespace contact {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVector from_bits(const std::vector<int>& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & 1) v.set(i);
        return v;
    }

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b = true) {
        if (b) w_[i >> 6] |= (uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    bool dot(const BitVector& o) const {
        uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return __builtin_parityll(acc);
    }
    // Lowest set index, or size() if zero.
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
        return len_;
    }
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) out.push_back(i);
        return out;
    }
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < len_; ++i) s += get(i) ? '1' : '0';
        return s;
    }
    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }

private:
    std::size_t len_ = 0;
    std::vector<uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows[0].size();
        BitMatrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                if (rows[i][j] & 1) m.set(i, j);
        }
        return m;
    }

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return r_.at(i).get(check_col(j)); }
    void set(std::size_t i, std::size_t j, bool b = true) { r_.at(i).set(check_col(j), b); }
    void flip(std::size_t i, std::size_t j) { r_.at(i).flip(check_col(j)); }
    const BitVector& row(std::size_t i) const { return r_.at(i); }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (r_[i].get(j)) t.set(j, i);
        return t;
    }
    BitVector apply(const BitVector& x) const {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
        BitVector y(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            if (r_[i].dot(x)) y.set(i);
        return y;
    }
    BitMatrix operator*(const BitMatrix& o) const {
        if (cols_ != o.rows()) throw DimensionMismatch("matrix product size mismatch");
        BitMatrix p(rows(), o.cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                if (r_[i].get(k)) p.r_[i] ^= o.r_[k];
        return p;
    }
    BitMatrix operator+(const BitMatrix& o) const {
        if (rows() != o.rows() || cols_ != o.cols_) throw DimensionMismatch("matrix sum size mismatch");
        BitMatrix s = *this;
        for (std::size_t i = 0; i < rows(); ++i) s.r_[i] ^= o.r_[i];
        return s;
    }
    bool is_zero() const {
        for (auto& r : r_)
            if (r.any()) return false;
        return true;
    }
    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && r_ == o.r_; }

private:
    std::size_t check_col(std::size_t j) const {
        if (j >= cols_) throw std::out_of_range("BitMatrix column out of range");
        return j;
    }
    std::size_t cols_ = 0;
    std::vector<BitVector> r_;
};

namespace detail {

// Reduced row echelon form with pivots chosen leftmost column, topmost row.
struct Echelon {
    std::vector<BitVector> rows;      // nonzero reduced rows, in pivot order
    std::vector<std::size_t> pivots;  // pivot column of each row
};

inline Echelon rref(const BitMatrix& m, BitVector* rhs = nullptr, std::vector<bool>* rhs_out = nullptr) {
    std::vector<BitVector> rows;
    std::vector<bool> b;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(m.row(i));
        b.push_back(rhs ? rhs->get(i) : false);
    }
    Echelon e;
    std::size_t top = 0;
    for (std::size_t c = 0; c < m.cols() && top < rows.size(); ++c) {
        std::size_t p = top;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[top]);
        std::swap(b[p], b[top]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != top && rows[i].get(c)) {
                rows[i] ^= rows[top];
                b[i] = b[i] != b[top];
            }
        e.pivots.push_back(c);
        ++top;
    }
    for (std::size_t i = 0; i < top; ++i) e.rows.push_back(rows[i]);
    if (rhs_out) *rhs_out = b;
    return e;
}

}  // namespace detail

inline std::size_t rank(const BitMatrix& m) { return detail::rref(m).pivots.size(); }

inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (m.rows() != b.size()) throw DimensionMismatch("solve: rhs length differs from row count");
    BitVector rhs = b;
    std::vector<bool> rb;
    auto e = detail::rref(m, &rhs, &rb);
    for (std::size_t i = e.pivots.size(); i < rb.size(); ++i)
        if (rb[i]) return std::nullopt;
    BitVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (rb[i]) x.set(e.pivots[i]);
    return x;
}

inline std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    auto e = detail::rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<BitVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.rows[i].get(f)) v.set(e.pivots[i]);
        out.push_back(v);
    }
    return out;
}

// Incremental span membership, used to pick homology representatives.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t len) : len_(len) {}
    // Returns true if v was independent (and is now included).
    bool insert(BitVector v) {
        reduce(v);
        if (!v.any()) return false;
        std::size_t p = v.first();
        for (auto& [b, q] : basis_)
            if (b.get(p)) b ^= v;
        basis_.emplace_back(std::move(v), p);
        return true;
    }
    bool contains(BitVector v) const {
        reduce(v);
        return !v.any();
    }
    std::size_t dim() const { return basis_.size(); }
    std::size_t length() const { return len_; }

private:
    void reduce(BitVector& v) const {
        for (auto& [b, p] : basis_)
            if (v.get(p)) v ^= b;
    }
    std::size_t len_;
    std::vector<std::pair<BitVector, std::size_t>> basis_;
};

}  // namespace contact
