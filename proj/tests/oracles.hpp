#pragma once

// Slow, obviously-correct reference computations. Nothing here reuses the
// library's search or counting code paths.

#include <c2surf/c2surf.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline Grid to_grid(const c2surf::F2Matrix& m) {
    Grid g(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.get(i, j);
    return g;
}

inline c2surf::F2Matrix from_grid(const Grid& g) {
    c2surf::F2Matrix m(g.size(), g.empty() ? 0 : g[0].size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j) m.set(i, j, g[i][j] & 1);
    return m;
}

inline Grid mul(const Grid& a, const Grid& b) {
    Grid c(a.size(), std::vector<int>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            int s = 0;
            for (std::size_t k = 0; k < b.size(); ++k) s ^= a[i][k] & b[k][j];
            c[i][j] = s;
        }
    return c;
}

inline Grid transpose(const Grid& a) {
    Grid t(a[0].size(), std::vector<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// Rank as the log2 of the number of distinct vectors in the row span.
inline std::size_t span_rank(const Grid& a) {
    std::set<std::vector<int>> span{std::vector<int>(a.empty() ? 0 : a[0].size(), 0)};
    for (const auto& row : a) {
        std::set<std::vector<int>> next = span;
        for (auto v : span) {
            for (std::size_t j = 0; j < v.size(); ++j) v[j] ^= row[j];
            next.insert(v);
        }
        span = std::move(next);
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

// Every n x n matrix with M^T G M = G, by filtering all 2^(n*n) candidates.
inline std::vector<c2surf::F2Matrix> filter_isometries(const c2surf::F2Matrix& gram) {
    const unsigned n = static_cast<unsigned>(gram.rows());
    const std::uint64_t g = gram.pack();
    std::vector<c2surf::F2Matrix> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
        std::uint64_t m = 0;
        for (unsigned i = 0; i < n; ++i) m |= ((bits >> (n * i)) & ((1u << n) - 1)) << (8 * i);
        namespace p = c2surf::packed;
        if (p::mul(p::mul(p::transpose(m, n), g, n), m, n) == g) out.push_back(c2surf::F2Matrix::unpack(n, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Orbits on F2^n under the group generated by gens, by breadth-first search.
inline std::size_t orbit_count_from_generators(const std::vector<c2surf::F2Matrix>& gens, std::size_t n) {
    std::vector<int> seen(std::size_t{1} << n, 0);
    std::size_t orbits = 0;
    for (std::uint64_t start = 0; start < seen.size(); ++start) {
        if (seen[start]) continue;
        ++orbits;
        std::vector<std::uint64_t> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                auto y = g.apply(x);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return orbits;
}

// Counting tuples (F, C+, C-) one by one.
inline long long A(int r) {
    long long n = 0;
    for (int F = 0; F <= r; ++F)
        for (int Cp = 0; F + 2 * Cp <= r; ++Cp)
            for (int Cm = 0; F + 2 * (Cp + Cm) <= r; ++Cm)
                if ((F - r) % 2 == 0 && (Cm - r) % 2 == 0) ++n;
    return n;
}

inline long long B(int r) {
    long long n = 0;
    for (int F = 0; F <= r + 2; ++F)
        for (int Cp = 0; F + 2 * Cp <= r + 2; ++Cp)
            for (int Cm = 0; F + 2 * (Cp + Cm) <= r + 2; ++Cm)
                if ((F - r) % 2 == 0 && (Cm - r) % 2 == 0 && (F + 2 * (Cp + Cm) - r - 2) % 4 == 0) ++n;
    return n;
}

// Search for an invertible integer matrix P with entries in [-k, k] and P^-1 R P = M.
inline bool gl2_conjugate_small(const c2surf::IntMatrix2& r, const c2surf::IntMatrix2& m, int k) {
    for (int a = -k; a <= k; ++a)
        for (int b = -k; b <= k; ++b)
            for (int c = -k; c <= k; ++c)
                for (int d = -k; d <= k; ++d) {
                    const long long det = static_cast<long long>(a) * d - static_cast<long long>(b) * c;
                    if (det != 1 && det != -1) continue;
                    const c2surf::IntMatrix2 p{a, b, c, d};
                    // R P = P M avoids the inverse.
                    if (r * p == p * m) return true;
                }
    return false;
}

} // namespace oracle
