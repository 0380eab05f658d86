#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "surface.hpp"

namespace c2surf {

using count_t = std::int64_t;

struct CountReport {
    int r = 0;
    count_t A = 0;
    count_t B = 0;
    count_t phi_minus = 0;
    count_t phi_plus = 0;
    count_t phi = 0;
    count_t total = 0;
    friend bool operator==(const CountReport&, const CountReport&) = default;
};

namespace detail {

inline void require_r(int r) {
    if (r < 1) throw DomainError("counting: r must be >= 1, got " + std::to_string(r));
}

inline count_t exact_div(count_t num, count_t den, const char* what) {
    if (num % den != 0)
        throw std::logic_error(std::string(what) + ": " + std::to_string(num) + " not divisible by " + std::to_string(den));
    return num / den;
}

} // namespace detail

// Tuple tables by exhaustive enumeration: entry [r] for r = 0..max_r.
struct DirectCounts {
    std::vector<count_t> A;
    std::vector<count_t> B;
};

// Every tuple (F, C+, C-) with F = C- (mod 2) and load L = F+2C <= max_r+2
// is visited once and tallied by L; A(r) and B(r) are sums over loads of the
// right residue.
inline DirectCounts direct_counts(int max_r) {
    if (max_r < 0) throw DomainError("direct_counts: negative bound");
    const int lmax = max_r + 2;
    std::vector<count_t> by_load(static_cast<std::size_t>(lmax) + 1, 0);
    for (int F = 0; F <= lmax; ++F)
        for (int Cm = F % 2; F + 2 * Cm <= lmax; Cm += 2)
            for (int Cp = 0; F + 2 * (Cm + Cp) <= lmax; ++Cp) ++by_load[static_cast<std::size_t>(F + 2 * (Cm + Cp))];
    DirectCounts out{std::vector<count_t>(static_cast<std::size_t>(max_r) + 1, 0),
                     std::vector<count_t>(static_cast<std::size_t>(max_r) + 1, 0)};
    for (int r = 1; r <= max_r; ++r) {
        for (int L = r % 2; L <= r; L += 2) out.A[static_cast<std::size_t>(r)] += by_load[static_cast<std::size_t>(L)];
        for (int L = (r + 2) % 4; L <= r + 2; L += 4) out.B[static_cast<std::size_t>(r)] += by_load[static_cast<std::size_t>(L)];
    }
    return out;
}

inline count_t A_direct(int r) {
    detail::require_r(r);
    return direct_counts(r).A[static_cast<std::size_t>(r)];
}
inline count_t B_direct(int r) {
    detail::require_r(r);
    return direct_counts(r).B[static_cast<std::size_t>(r)];
}

inline count_t A_closed(int r) {
    detail::require_r(r);
    const count_t x = r;
    switch (r % 4) {
    case 0: return detail::exact_div((x + 3) * (x + 4) * (x + 8), 96, "A_closed");
    case 1: return detail::exact_div((x - 1) * (x + 3) * (x + 4), 96, "A_closed");
    case 2: return detail::exact_div((x + 2) * (x + 6) * (x + 7), 96, "A_closed");
    default: return detail::exact_div(x * (x + 1) * (x + 5), 96, "A_closed");
    }
}

inline count_t B_closed(int r) {
    detail::require_r(r);
    const count_t x = r;
    switch (r % 4) {
    case 0: return detail::exact_div((x + 4) * (x + 8) * (x + 12), 192, "B_closed");
    case 1: return detail::exact_div((x + 3) * (x + 5) * (x + 7), 192, "B_closed");
    case 2: return detail::exact_div((x + 6) * (x + 8) * (x + 10), 192, "B_closed");
    default: return detail::exact_div((x + 1) * (x + 5) * (x + 9), 192, "B_closed");
    }
}

// A(r+2) - A(r).
inline count_t A_increment(int r) {
    const count_t x = r;
    switch (r % 4) {
    case 0: return detail::exact_div((x + 4) * (x + 8), 16, "A_increment");
    case 1: return detail::exact_div((x + 3) * (x + 3), 16, "A_increment");
    case 2: return detail::exact_div((x + 6) * (x + 6), 16, "A_increment");
    default: return detail::exact_div((x + 1) * (x + 5), 16, "A_increment");
    }
}

// B(r+4) - B(r).
inline count_t B_increment(int r) {
    const count_t x = r;
    switch (r % 4) {
    case 0: return detail::exact_div((x + 8) * (x + 12), 16, "B_increment");
    case 1: return detail::exact_div((x + 7) * (x + 7), 16, "B_increment");
    case 2: return detail::exact_div((x + 10) * (x + 10), 16, "B_increment");
    default: return detail::exact_div((x + 5) * (x + 9), 16, "B_increment");
    }
}

// Seeds A(1) = 0, A(2) = 3.
inline count_t A_recursive(int r) {
    detail::require_r(r);
    int k = 2 - r % 2;
    count_t a = k == 1 ? 0 : 3;
    for (; k < r; k += 2) a += A_increment(k);
    return a;
}

// Seeds B(1..4) = 1, 5, 2, 8.
inline count_t B_recursive(int r) {
    detail::require_r(r);
    static constexpr count_t seed[4] = {1, 5, 2, 8};
    int k = (r - 1) % 4 + 1;
    count_t b = seed[k - 1];
    for (; k < r; k += 4) b += B_increment(k);
    return b;
}

// A(r) + B(r) by its own closed form.
inline count_t AB_sum_closed(int r) {
    detail::require_r(r);
    const count_t x = r;
    switch (r % 4) {
    case 0: return detail::exact_div((x + 4) * (x + 6) * (x + 8), 64, "AB_sum_closed");
    case 1: return detail::exact_div((x + 3) * (x + 3) * (x + 3), 64, "AB_sum_closed");
    case 2: return detail::exact_div((x + 6) * (x + 6) * (x + 6), 64, "AB_sum_closed");
    default: return detail::exact_div((x + 1) * (x + 3) * (x + 5), 64, "AB_sum_closed");
    }
}

// Assembles the report after checking that all three routes agree.
inline CountReport phi_counts(int r, count_t a_direct, count_t b_direct) {
    detail::require_r(r);
    const count_t a = A_closed(r), b = B_closed(r);
    if (a != a_direct || a != A_recursive(r))
        throw std::logic_error("A(" + std::to_string(r) + "): closed, recursive and direct counts disagree");
    if (b != b_direct || b != B_recursive(r))
        throw std::logic_error("B(" + std::to_string(r) + "): closed, recursive and direct counts disagree");
    CountReport rep{r, a, b, a, b, 0, 0};
    if (r % 2 == 0) {
        rep.phi_minus = a + r - 2;
        rep.phi_plus = b - 1 - (r % 4 == 0 ? (r + 4) / 4 : (r + 6) / 4);
    }
    rep.phi = rep.phi_minus + rep.phi_plus;
    rep.total = rep.phi + 1;
    return rep;
}

inline CountReport phi_counts(int r) {
    detail::require_r(r);
    const DirectCounts d = direct_counts(r);
    return phi_counts(r, d.A[static_cast<std::size_t>(r)], d.B[static_cast<std::size_t>(r)]);
}

// Number of involutions up to isomorphism, the identity included.
inline count_t total_count(const Surface& s) {
    if (s.orientable) {
        if (s.genus < 0) throw DomainError("total_count: negative genus");
        return 4 + 2 * static_cast<count_t>(s.genus);
    }
    detail::require_r(s.genus);
    const count_t x = s.genus;
    switch (s.genus % 4) {
    case 0: return detail::exact_div(x * x * x + 18 * x * x + 152 * x, 64, "total_count");
    case 1: return 1 + detail::exact_div((x + 3) * (x + 3) * (x + 3), 64, "total_count");
    case 2: return detail::exact_div(x * x * x + 18 * x * x + 156 * x - 8, 64, "total_count");
    default: return 1 + detail::exact_div((x + 1) * (x + 3) * (x + 5), 64, "total_count");
    }
}

} // namespace c2surf
