#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"

namespace c2surf {

// Vector over the two-element field, packed 64 bits per word.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    F2Vector(std::initializer_list<int> bits) : F2Vector(bits.size()) {
        std::size_t i = 0;
        for (int b : bits) set(i++, b & 1);
    }

    static F2Vector from_word(std::size_t n, std::uint64_t word) {
        if (n > 64) throw std::invalid_argument("F2Vector::from_word: length above 64");
        F2Vector v(n);
        if (n) v.w_[0] = word & mask(n);
        return v;
    }
    static F2Vector ones(std::size_t n) {
        F2Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, true);
        return v;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const {
        check(i);
        return (w_[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i, bool b) {
        check(i);
        std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (b) w_[i / 64] |= bit;
        else w_[i / 64] &= ~bit;
    }
    void flip(std::size_t i) {
        check(i);
        w_[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    // Only valid for length <= 64.
    std::uint64_t word() const {
        if (n_ > 64) throw std::invalid_argument("F2Vector::word: length above 64");
        return n_ ? w_[0] : 0;
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool is_zero() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }

    F2Vector& operator+=(const F2Vector& o) {
        if (o.n_ != n_) throw std::invalid_argument("F2Vector: length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }

    friend bool dot(const F2Vector& a, const F2Vector& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("F2Vector: length mismatch");
        unsigned p = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) p ^= std::popcount(a.w_[k] & b.w_[k]) & 1u;
        return p & 1u;
    }

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend bool operator<(const F2Vector& a, const F2Vector& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.w_ < b.w_;
    }

    // "[1,0,1]"
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ',';
            s += get(i) ? '1' : '0';
        }
        return s + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const F2Vector& v) { return os << v.str(); }

    static std::uint64_t mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

private:
    void check(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("F2Vector index");
    }
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline bool content(const F2Vector& v) { return v.weight() & 1u; }

// Matrix over the two-element field; row i is one word, bit j is entry (i,j).
// Column count is limited to 64.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), r_(rows, 0) {
        if (cols > 64) throw std::invalid_argument("F2Matrix: more than 64 columns");
    }
    F2Matrix(std::initializer_list<std::initializer_list<int>> rows)
        : F2Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("F2Matrix: ragged initializer");
            std::size_t j = 0;
            for (int b : row) set(i, j++, b & 1);
            ++i;
        }
    }

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.r_[i] = std::uint64_t{1} << i;
        return m;
    }
    static F2Matrix from_rows(std::size_t cols, std::vector<std::uint64_t> rows) {
        F2Matrix m(rows.size(), cols);
        for (auto& x : rows) x &= F2Vector::mask(cols);
        m.r_ = std::move(rows);
        return m;
    }
    // Matrix whose column j is cols[j].
    static F2Matrix from_columns(std::size_t rows, const std::vector<std::uint64_t>& cols) {
        F2Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i)
                if ((cols[j] >> i) & 1u) m.r_[i] |= std::uint64_t{1} << j;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    bool get(std::size_t i, std::size_t j) const {
        check(i, j);
        return (r_[i] >> j) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool b) {
        check(i, j);
        std::uint64_t bit = std::uint64_t{1} << j;
        if (b) r_[i] |= bit;
        else r_[i] &= ~bit;
    }
    std::uint64_t row(std::size_t i) const { return r_.at(i); }
    std::uint64_t column(std::size_t j) const {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < rows_; ++i) c |= ((r_[i] >> j) & 1u) << i;
        return c;
    }
    const std::vector<std::uint64_t>& row_words() const { return r_; }

    F2Matrix transpose() const {
        F2Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((r_[i] >> j) & 1u) t.r_[j] |= std::uint64_t{1} << i;
        return t;
    }

    F2Matrix& operator+=(const F2Matrix& o) {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("F2Matrix: shape mismatch in sum");
        for (std::size_t i = 0; i < rows_; ++i) r_[i] ^= o.r_[i];
        return *this;
    }
    friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }

    // M·v for v packed in a word (length cols).
    std::uint64_t apply(std::uint64_t v) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < rows_; ++i) out |= std::uint64_t(std::popcount(r_[i] & v) & 1) << i;
        return out;
    }
    F2Vector apply(const F2Vector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("F2Matrix::apply: length mismatch");
        return F2Vector::from_word(rows_, apply(v.word()));
    }

    bool is_identity() const { return square() && *this == identity(rows_); }
    bool is_symmetric() const { return square() && *this == transpose(); }

    // Row-major bit encoding; only for rows, cols <= 8.
    std::uint64_t pack() const {
        if (rows_ > 8 || cols_ > 8) throw std::invalid_argument("F2Matrix::pack: above 8x8");
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < rows_; ++i) code |= r_[i] << (8 * i);
        return code;
    }
    static F2Matrix unpack(std::size_t n, std::uint64_t code) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.r_[i] = (code >> (8 * i)) & 0xffu & F2Vector::mask(n);
        return m;
    }

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
    friend bool operator<(const F2Matrix& a, const F2Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.r_ < b.r_;
    }

    std::size_t hash() const {
        std::size_t h = rows_ * 131 + cols_;
        for (auto x : r_) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(x);
        return h;
    }

    // "[[1,0],[0,1]]"
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += ',';
            s += '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ',';
                s += get(i, j) ? '1' : '0';
            }
            s += ']';
        }
        return s + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const F2Matrix& m) { return os << m.str(); }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("F2Matrix index");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> r_;
};

struct F2MatrixHash {
    std::size_t operator()(const F2Matrix& m) const { return m.hash(); }
};

inline F2Matrix mat_mul(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                                    std::to_string(b.rows()) + " differ");
    std::vector<std::uint64_t> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t ri = a.row(i);
        while (ri) {
            int j = std::countr_zero(ri);
            out[i] ^= b.row(static_cast<std::size_t>(j));
            ri &= ri - 1;
        }
    }
    return F2Matrix::from_rows(b.cols(), std::move(out));
}

inline F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) { return mat_mul(a, b); }

inline std::size_t rank(const F2Matrix& m) {
    std::vector<std::uint64_t> rows = m.row_words();
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
        std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t piv = r;
        while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

inline bool is_invertible(const F2Matrix& m) { return m.square() && rank(m) == m.rows(); }

// Gauss-Jordan inverse; throws DomainError on a singular input.
inline F2Matrix inverse(const F2Matrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    std::vector<std::uint64_t> a = m.row_words();
    std::vector<std::uint64_t> inv = F2Matrix::identity(n).row_words();
    for (std::size_t col = 0; col < n; ++col) {
        std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t piv = col;
        while (piv < n && !(a[piv] & bit)) ++piv;
        if (piv == n) throw DomainError("inverse: matrix is singular");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != col && (a[i] & bit)) {
                a[i] ^= a[col];
                inv[i] ^= inv[col];
            }
    }
    return F2Matrix::from_rows(n, std::move(inv));
}

// Basis of {v : M·v = 0}, each vector packed in a word.
inline std::vector<std::uint64_t> kernel_basis(const F2Matrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::uint64_t> rows = m.row_words();
    std::vector<int> pivot_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t piv = r;
        while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        pivot_of_col[col] = static_cast<int>(r);
        ++r;
    }
    std::vector<std::uint64_t> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::uint64_t v = std::uint64_t{1} << free;
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0 && ((rows[static_cast<std::size_t>(pivot_of_col[col])] >> free) & 1u))
                v |= std::uint64_t{1} << col;
        basis.push_back(v);
    }
    return basis;
}

// Subgroup generated by invertible square matrices, by breadth-first closure.
// Sorted by the row-major encoding.
inline std::vector<F2Matrix> group_closure(const std::vector<F2Matrix>& generators, std::size_t n) {
    for (const auto& g : generators) {
        if (!g.square() || g.rows() != n) throw std::invalid_argument("group_closure: generator of wrong shape");
        if (!is_invertible(g)) throw DomainError("group_closure: singular generator " + g.str());
    }
    std::unordered_set<F2Matrix, F2MatrixHash> seen;
    std::vector<F2Matrix> frontier{F2Matrix::identity(n)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<F2Matrix> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                F2Matrix y = x * g;
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    std::vector<F2Matrix> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<F2Matrix> group_closure(const std::vector<F2Matrix>& generators) {
    if (generators.empty()) throw std::invalid_argument("group_closure: no generators and no dimension");
    return group_closure(generators, generators.front().rows());
}

// Fast arithmetic on matrices of size <= 8 packed by F2Matrix::pack.
namespace packed {

inline std::uint64_t row(std::uint64_t m, unsigned i) { return (m >> (8 * i)) & 0xffu; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, unsigned n) {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < n; ++i) {
        std::uint64_t ri = row(a, i), acc = 0;
        while (ri) {
            unsigned j = static_cast<unsigned>(std::countr_zero(ri));
            acc ^= row(b, j);
            ri &= ri - 1;
        }
        out |= acc << (8 * i);
    }
    return out;
}

inline std::uint64_t transpose(std::uint64_t a, unsigned n) {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if ((a >> (8 * i + j)) & 1u) out |= std::uint64_t{1} << (8 * j + i);
    return out;
}

inline std::uint64_t identity(unsigned n) {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < n; ++i) out |= std::uint64_t{1} << (8 * i + i);
    return out;
}

} // namespace packed

} // namespace c2surf

template <>
struct std::hash<c2surf::F2Matrix> {
    std::size_t operator()(const c2surf::F2Matrix& m) const { return m.hash(); }
};
