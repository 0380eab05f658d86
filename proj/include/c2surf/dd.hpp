#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bilinear.hpp"
#include "error.hpp"
#include "f2.hpp"
#include "isometry.hpp"

namespace c2surf {

struct DDTuple {
    int d = 0;
    int alpha = 0;
    int d_tilde = 0;
    int alpha_tilde = 0;

    friend bool operator==(const DDTuple&, const DDTuple&) = default;
    friend auto operator<=>(const DDTuple&, const DDTuple&) = default;

    std::string str() const {
        return "[" + std::to_string(d) + "," + std::to_string(alpha) + "," + std::to_string(d_tilde) + "," +
               std::to_string(alpha_tilde) + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const DDTuple& t) { return os << t.str(); }
};

inline int d_invariant(const Involution& s) {
    return static_cast<int>(rank(s.matrix() + F2Matrix::identity(s.space().dim())));
}

// Basis of <Omega>^perp = {v : b(v, Omega) = 0}.
inline std::vector<std::uint64_t> omega_perp_basis(const BilinearSpace& v) {
    F2Matrix functional(1, v.dim());
    std::uint64_t w = v.gram().apply(omega_vector(v).word());
    for (std::size_t j = 0; j < v.dim(); ++j) functional.set(0, j, (w >> j) & 1u);
    return kernel_basis(functional);
}

inline int alpha_invariant(const Involution& s) {
    const BilinearSpace& v = s.space();
    // F(v) = b(v, sigma v) is linear, so it is determined on a basis.
    auto f = [&](std::uint64_t x) { return v.b(x, s.matrix().apply(x)); };
    if (v.dim() % 2 == 0) {
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (f(std::uint64_t{1} << i)) return 1;
        return 0;
    }
    for (std::uint64_t x : omega_perp_basis(v))
        if (f(x)) return 1;
    return 0;
}

// Matrix of v -> sigma(v) + b(v,v) Omega.
inline F2Matrix mirror_matrix_formula(const Involution& s) {
    const BilinearSpace& v = s.space();
    const std::size_t n = v.dim();
    const std::uint64_t omega = omega_vector(v).word();
    std::vector<std::uint64_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        cols[j] = s.matrix().column(j);
        if (v.gram().get(j, j)) cols[j] ^= omega;
    }
    return F2Matrix::from_columns(n, cols);
}

inline Involution mirror(const Involution& s) {
    const BilinearSpace& v = s.space();
    if (classify_space(v) != FormKind::EVO) return s;
    if (v.gram().is_identity()) {
        F2Matrix flipped = s.matrix();
        for (std::size_t i = 0; i < v.dim(); ++i)
            for (std::size_t j = 0; j < v.dim(); ++j) flipped.set(i, j, !flipped.get(i, j));
        return make_involution(v, flipped);
    }
    return make_involution(v, mirror_matrix_formula(s));
}

inline DDTuple dd(const Involution& s) {
    Involution m = mirror(s);
    return {d_invariant(s), alpha_invariant(s), d_invariant(m), alpha_invariant(m)};
}

// DD of sigma (+) theta, sigma on a symplectic space and theta the swap of r
// orthonormal pairs.
inline DDTuple dd_direct_sum(const DDTuple& sym_part, int r) {
    if (sym_part.d_tilde != sym_part.d || sym_part.alpha_tilde != sym_part.alpha)
        throw DomainError("dd_direct_sum: first summand is not symplectic");
    if (r < 0) throw DomainError("dd_direct_sum: negative swap count");
    if (r == 0) throw DomainError("dd_direct_sum: r = 0 leaves no orthogonal summand");
    const int d = sym_part.d + r;
    return {d, sym_part.alpha, r % 2 ? d - 1 : d, 1};
}

// Exhaustive search for P in Iso(V) with P^-1 a P = b.
inline bool conjugacy_oracle(const Involution& a, const Involution& b, std::size_t bound = kDefaultOracleBound) {
    if (!(a.space() == b.space())) throw std::invalid_argument("conjugacy_oracle: involutions on different spaces");
    const unsigned n = static_cast<unsigned>(a.space().dim());
    detail::check_bound(n, bound, "conjugacy_oracle");
    const std::uint64_t ap = a.matrix().pack(), bp = b.matrix().pack();
    bool found = false;
    // P^-1 a P = b  <=>  a P = P b
    for_each_isometry(
        a.space(),
        [&](std::uint64_t p) {
            if (!found && packed::mul(ap, p, n) == packed::mul(p, bp, n)) found = true;
        },
        bound);
    return found;
}

} // namespace c2surf
