#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bilinear.hpp"
#include "error.hpp"
#include "f2.hpp"

namespace c2surf {

inline constexpr std::size_t kDefaultOracleBound = 6;

namespace detail {

inline void check_bound(std::size_t dim, std::size_t bound, const char* who) {
    if (bound > 8) throw BoundError(std::string(who) + ": bound above 8 is not supported");
    if (dim > bound)
        throw BoundError(std::string(who) + ": dimension " + std::to_string(dim) + " exceeds oracle bound " +
                         std::to_string(bound));
}

// Column-by-column search: column j must pair with earlier columns exactly as
// e_j pairs with e_i under the gram matrix.
// gx[x] holds G·x, so b(u, x) is the parity of u & gx[x].
template <class Fn>
void isometry_search(const F2Matrix& g, const std::vector<std::uint64_t>& gx, std::vector<std::uint64_t>& cols,
                     Fn& fn) {
    const std::size_t n = g.rows(), j = cols.size();
    if (j == n) {
        fn(static_cast<const std::vector<std::uint64_t>&>(cols));
        return;
    }
    auto b = [&](std::uint64_t u, std::uint64_t x) { return bool(std::popcount(u & gx[x]) & 1); };
    for (std::uint64_t x = 0; x < gx.size(); ++x) {
        if (b(x, x) != g.get(j, j)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i) ok = b(cols[i], x) == g.get(i, j);
        if (!ok) continue;
        cols.push_back(x);
        isometry_search(g, gx, cols, fn);
        cols.pop_back();
    }
}

} // namespace detail

// Calls fn(packed matrix) for every M with M^T G M = G.
template <class Fn>
void for_each_isometry(const BilinearSpace& v, Fn&& fn, std::size_t bound = kDefaultOracleBound) {
    detail::check_bound(v.dim(), bound, "enumerate_isometries");
    const std::size_t n = v.dim();
    std::vector<std::uint64_t> cols;
    cols.reserve(n);
    auto emit = [&](const std::vector<std::uint64_t>& c) {
        std::uint64_t code = 0;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if ((c[j] >> i) & 1u) code |= std::uint64_t{1} << (8 * i + j);
        fn(code);
    };
    std::vector<std::uint64_t> gx(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < gx.size(); ++x) gx[x] = v.gram().apply(x);
    detail::isometry_search(v.gram(), gx, cols, emit);
}

// Packed encodings of Iso(V), in search order.
inline std::vector<std::uint64_t> isometry_codes(const BilinearSpace& v, std::size_t bound = kDefaultOracleBound) {
    std::vector<std::uint64_t> out;
    for_each_isometry(v, [&](std::uint64_t code) { out.push_back(code); }, bound);
    return out;
}

inline std::vector<F2Matrix> enumerate_isometries(const BilinearSpace& v, std::size_t bound = kDefaultOracleBound) {
    std::vector<F2Matrix> out;
    for_each_isometry(v, [&](std::uint64_t code) { out.push_back(F2Matrix::unpack(v.dim(), code)); }, bound);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace c2surf
