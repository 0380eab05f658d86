#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "error.hpp"

namespace c2surf {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in GL2 arithmetic");
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in GL2 arithmetic");
    return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in GL2 arithmetic");
    return r;
}

} // namespace checked

struct IntMatrix2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }
    std::int64_t det() const { return checked::sub(checked::mul(a, d), checked::mul(b, c)); }

    friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
        using namespace checked;
        return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
                add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
    }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
               std::to_string(d) + "]]";
    }
    friend std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) { return os << m.str(); }
};

// Inverse of a matrix with determinant +1 or -1.
inline IntMatrix2 gl2_inverse(const IntMatrix2& m) {
    const std::int64_t det = m.det();
    if (det != 1 && det != -1) throw DomainError("matrix " + m.str() + " is not in GL2(Z)");
    return {det * m.d, checked::mul(-det, m.b), checked::mul(-det, m.c), det * m.a};
}

inline IntMatrix2 conjugate(const IntMatrix2& p, const IntMatrix2& m) { return gl2_inverse(p) * m * p; }

enum class Gl2Class { Id, NegId, Sclass, Tclass };

inline const char* to_string(Gl2Class c) {
    switch (c) {
    case Gl2Class::Id: return "Id";
    case Gl2Class::NegId: return "NegId";
    case Gl2Class::Sclass: return "Sclass";
    case Gl2Class::Tclass: return "Tclass";
    }
    return "?";
}

inline const IntMatrix2 kGl2S{1, 0, 0, -1};
inline const IntMatrix2 kGl2T{0, 1, 1, 0};

inline IntMatrix2 representative(Gl2Class c) {
    switch (c) {
    case Gl2Class::Id: return IntMatrix2::identity();
    case Gl2Class::NegId: return {-1, 0, 0, -1};
    case Gl2Class::Sclass: return kGl2S;
    case Gl2Class::Tclass: return kGl2T;
    }
    return {};
}

inline bool gl2_is_involution(const IntMatrix2& m) {
    try {
        return m * m == IntMatrix2::identity();
    } catch (const std::overflow_error&) {
        return false;
    }
}

// Parity rule.
inline Gl2Class gl2_class(const IntMatrix2& m) {
    if (!gl2_is_involution(m)) throw DomainError("matrix " + m.str() + " does not have order at most 2");
    if (m == IntMatrix2::identity()) return Gl2Class::Id;
    if (m == representative(Gl2Class::NegId)) return Gl2Class::NegId;
    return (m.b % 2 == 0 && m.c % 2 == 0) ? Gl2Class::Sclass : Gl2Class::Tclass;
}

struct Gl2Reduction {
    Gl2Class rep;
    IntMatrix2 P;  // P^-1 * representative(rep) * P == input
};

// Elementary conjugators of the four standard relations.
inline IntMatrix2 relation1() { return {-1, 0, 0, 1}; }
inline IntMatrix2 relation2(std::int64_t lambda) { return {1, 0, lambda, 1}; }
inline IntMatrix2 relation3(std::int64_t lambda) { return {1, lambda, 0, 1}; }
inline IntMatrix2 relation4() { return {0, 1, 1, 0}; }

namespace detail {

inline std::int64_t sgn(std::int64_t v) { return (v > 0) - (v < 0); }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline void require_det_minus_one(const IntMatrix2& m) {
    if (!gl2_is_involution(m)) throw DomainError("matrix " + m.str() + " does not have order at most 2");
    if (m == IntMatrix2::identity() || m == representative(Gl2Class::NegId))
        throw DomainError("matrix " + m.str() + " is central; nothing to reduce");
}

} // namespace detail

// Conjugates by relations (1)-(4) until S or T is reached, shrinking |a| at
// each step. Independent of the parity rule.
inline Gl2Reduction gl2_reduce_by_relations(const IntMatrix2& m) {
    detail::require_det_minus_one(m);
    IntMatrix2 cur = m, q = IntMatrix2::identity();
    auto step = [&](const IntMatrix2& e) {
        cur = conjugate(e, cur);
        q = q * e;
    };
    using detail::sgn;
    for (int guard = 0; guard < 100000; ++guard) {
        if (cur == kGl2S || cur == kGl2T) return {cur == kGl2S ? Gl2Class::Sclass : Gl2Class::Tclass, gl2_inverse(q)};
        const std::int64_t x = cur.a, y = cur.b, z = cur.c;
        if (x == 0) {
            step(relation1());  // -T -> T
        } else if (y == 0 && z == 0) {
            step(relation4());  // -S -> S
        } else if (y != 0 && (y < 0 ? -y : y) <= (x < 0 ? -x : x)) {
            step(relation2(-sgn(x) * sgn(y)));
        } else if (z != 0 && (z < 0 ? -z : z) <= (x < 0 ? -x : x)) {
            step(relation3(sgn(x) * sgn(z)));
        } else if (z == 0) {
            // |x| = 1: relation (3) moves y by 2*lambda*x into {-1, 0, 1}.
            step(relation3(-detail::floor_div(y + 1, 2) * x));
        } else if (y == 0) {
            step(relation2(detail::floor_div(z + 1, 2) * x));
        } else {
            throw std::logic_error("gl2_reduce_by_relations: no relation applies to " + cur.str());
        }
    }
    throw std::logic_error("gl2_reduce_by_relations: no termination for " + m.str());
}

// S-class witness from the factor split wx = n+1, yz = n, wy = b', xz = -c'.
inline IntMatrix2 gl2_s_witness(const IntMatrix2& m) {
    if (m.b % 2 != 0 || m.c % 2 != 0) throw DomainError("gl2_s_witness: off-diagonal entries must be even");
    const std::int64_t n = detail::floor_div(m.a - 1, 2), bp = m.b / 2, cp = m.c / 2;
    std::int64_t x, y, z, w;
    const std::int64_t g = std::gcd(bp, checked::add(n, 1));
    if (g == 0) {  // b' = 0 and n = -1
        w = 0;
        y = 1;
        z = -1;
        x = cp;
    } else {
        w = g;
        x = checked::add(n, 1) / w;
        y = bp / w;
        if (y == 0) {  // b' = 0 forces n = 0
            z = -cp;
        } else {
            if (n % y != 0) throw std::logic_error("gl2_s_witness: factor split failed for " + m.str());
            z = n / y;
        }
    }
    IntMatrix2 p{x, y, z, w};
    if (p.det() != 1 || conjugate(p, kGl2S) != m) throw std::logic_error("gl2_s_witness: witness check failed for " + m.str());
    return p;
}

inline Gl2Reduction gl2_reduce(const IntMatrix2& m) {
    detail::require_det_minus_one(m);
    if (gl2_class(m) == Gl2Class::Sclass) return {Gl2Class::Sclass, gl2_s_witness(m)};
    Gl2Reduction r = gl2_reduce_by_relations(m);
    if (r.rep != Gl2Class::Tclass) throw std::logic_error("gl2_reduce: parity rule and reduction disagree on " + m.str());
    return r;
}

} // namespace c2surf
