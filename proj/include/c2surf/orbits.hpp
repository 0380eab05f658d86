#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bilinear.hpp"
#include "error.hpp"
#include "f2.hpp"
#include "isometry.hpp"
#include "surface.hpp"
#include "word.hpp"

namespace c2surf {

enum class OrthOrbit { Zero, A1, A2, OmegaOrbit };
enum class SympOrbit { Zero, Nonzero };

inline const char* to_string(OrthOrbit o) {
    switch (o) {
    case OrthOrbit::Zero: return "Zero";
    case OrthOrbit::A1: return "A1";
    case OrthOrbit::A2: return "A2";
    case OrthOrbit::OmegaOrbit: return "OmegaOrbit";
    }
    return "?";
}

// For n = 2 the vector [1,1] is Omega and there is no separate A2 orbit.
inline OrthOrbit orthogonal_orbit(const F2Vector& v) {
    if (v.size() < 2) throw DomainError("orthogonal_orbit: length must be >= 2");
    if (v.is_zero()) return OrthOrbit::Zero;
    if (v.weight() == v.size()) return OrthOrbit::OmegaOrbit;
    return content(v) ? OrthOrbit::A1 : OrthOrbit::A2;
}

inline SympOrbit symplectic_orbit(const F2Vector& v) {
    if (v.size() % 2) throw DomainError("symplectic_orbit: odd length " + std::to_string(v.size()));
    return v.is_zero() ? SympOrbit::Zero : SympOrbit::Nonzero;
}

// All transpositions, plus A (+) I_{n-4} for n >= 4 where A = J - I on F2^4.
inline std::vector<F2Matrix> orthogonal_generators(std::size_t n) {
    std::vector<F2Matrix> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            F2Matrix p = F2Matrix::identity(n);
            p.set(i, i, false);
            p.set(j, j, false);
            p.set(i, j, true);
            p.set(j, i, true);
            gens.push_back(std::move(p));
        }
    if (n >= 4) {
        F2Matrix a = F2Matrix::identity(n);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.set(i, j, i != j);
        gens.push_back(std::move(a));
    }
    if (gens.empty()) gens.push_back(F2Matrix::identity(n));
    return gens;
}

inline bool verify_orthogonal_generators(std::size_t n, std::size_t bound = kDefaultOracleBound) {
    if (n < 1) throw DomainError("verify_orthogonal_generators: n must be >= 1");
    detail::check_bound(n, bound, "verify_orthogonal_generators");
    return group_closure(orthogonal_generators(n), n) == enumerate_isometries(standard_space(StandardForm::Orthogonal, n), bound);
}

namespace detail {

inline std::uint64_t packed_apply(std::uint64_t m, unsigned n, std::uint64_t x) {
    std::uint64_t y = 0;
    for (unsigned i = 0; i < n; ++i) y |= std::uint64_t(std::popcount(packed::row(m, i) & x) & 1) << i;
    return y;
}

inline std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

} // namespace detail

// Orbits of Iso(V) on V, by union-find over every group element.
inline std::vector<std::vector<std::uint64_t>> orbit_partition(const BilinearSpace& v, std::size_t bound = kDefaultOracleBound) {
    const unsigned n = static_cast<unsigned>(v.dim());
    detail::check_bound(n, bound, "orbit_census");
    std::vector<std::size_t> parent(std::size_t{1} << n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for_each_isometry(
        v,
        [&](std::uint64_t m) {
            for (std::uint64_t x = 0; x < parent.size(); ++x) {
                auto a = detail::find_root(parent, x), b = detail::find_root(parent, detail::packed_apply(m, n, x));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        },
        bound);
    std::vector<std::vector<std::uint64_t>> orbits;
    std::vector<long> index(parent.size(), -1);
    for (std::uint64_t x = 0; x < parent.size(); ++x) {
        auto r = detail::find_root(parent, x);
        if (index[r] < 0) {
            index[r] = static_cast<long>(orbits.size());
            orbits.emplace_back();
        }
        orbits[static_cast<std::size_t>(index[r])].push_back(x);
    }
    return orbits;
}

inline std::size_t orbit_census(StandardForm kind, std::size_t n, std::size_t bound = kDefaultOracleBound) {
    return orbit_partition(standard_space(kind, n), bound).size();
}

// ---- free actions ----

enum class FreeKind { TgAnti, T1AntiPlusDCC, S2aPlusDCC, TgRot };

struct FreeActionDescriptor {
    FreeKind kind;
    int g = 0;
    int s = 0;

    static FreeActionDescriptor anti(int g, int s = 0) { return {FreeKind::TgAnti, g, s}; }
    static FreeActionDescriptor t1_anti(int s) { return {FreeKind::T1AntiPlusDCC, 1, s}; }
    static FreeActionDescriptor s2a(int s) { return {FreeKind::S2aPlusDCC, 0, s}; }
    static FreeActionDescriptor rot(int g, int s = 0) { return {FreeKind::TgRot, g, s}; }

    void validate() const {
        const bool ok = s >= 0 && (kind == FreeKind::TgAnti      ? g >= 1
                                   : kind == FreeKind::TgRot     ? g >= 1 && g % 2 == 1
                                   : kind == FreeKind::T1AntiPlusDCC ? g == 1
                                                                     : g == 0);
        if (!ok) throw DomainError("invalid free action descriptor (g=" + std::to_string(g) + ", s=" + std::to_string(s) + ")");
    }

    SurgeryWord word() const {
        validate();
        switch (kind) {
        case FreeKind::TgAnti:
        case FreeKind::T1AntiPlusDCC: return SurgeryWord(BaseSpace::anti(g)).plus(Op::DCC, s);
        case FreeKind::S2aPlusDCC: return SurgeryWord(BaseSpace::s2a()).plus(Op::DCC, s);
        case FreeKind::TgRot: return SurgeryWord(BaseSpace::rot(g)).plus(Op::DCC, s);
        }
        return SurgeryWord(BaseSpace::s2a());
    }

    Surface total() const { return underlying_surface(word()); }

    Surface quotient() const {
        validate();
        const int b = total().beta();
        if (kind == FreeKind::TgRot && s == 0) return Surface::torus((g + 1) / 2);
        return Surface::nonorientable(b / 2 + 1);
    }

    friend bool operator==(const FreeActionDescriptor&, const FreeActionDescriptor&) = default;
};

// Orthonormal coordinates, except TgRot with s = 0 whose quotient is
// orientable; there the vector is in a symplectic basis.
inline F2Vector characteristic_class(const FreeActionDescriptor& d) {
    d.validate();
    auto lead = [](std::size_t ones, std::size_t len) {
        F2Vector v(len);
        for (std::size_t i = 0; i < ones; ++i) v.set(i, true);
        return v;
    };
    const auto g = static_cast<std::size_t>(d.g), s = static_cast<std::size_t>(d.s);
    switch (d.kind) {
    case FreeKind::TgAnti: return lead(g + 1, g + 1 + s);
    case FreeKind::S2aPlusDCC: return lead(1, s + 1);
    case FreeKind::T1AntiPlusDCC: return lead(2, s + 2);
    case FreeKind::TgRot:
        if (s == 0) return lead(1, g + 1);
        return lead(2, g + s + 1);
    }
    return {};
}

inline std::vector<FreeActionDescriptor> covers_of(const Surface& q) {
    if (q.orientable) {
        if (q.genus < 1) throw DomainError("covers_of: T0 is not the quotient of a free involution");
        return {FreeActionDescriptor::rot(2 * q.genus - 1)};
    }
    const int r = q.genus;
    if (r == 1) return {FreeActionDescriptor::s2a(0)};
    if (r == 2) return {FreeActionDescriptor::anti(1), FreeActionDescriptor::s2a(1)};
    return {FreeActionDescriptor::anti(r - 1), FreeActionDescriptor::s2a(r - 1), FreeActionDescriptor::t1_anti(r - 2)};
}

inline std::vector<FreeActionDescriptor> classify_free_structures(const Surface& x) {
    if (x.orientable) {
        if (x.genus == 0) return {FreeActionDescriptor::s2a(0)};
        if (x.genus % 2 == 0) return {FreeActionDescriptor::anti(x.genus)};
        return {FreeActionDescriptor::anti(x.genus), FreeActionDescriptor::rot(x.genus)};
    }
    if (x.genus % 2) return {};
    const int s = x.genus / 2;
    if (s == 1) return {FreeActionDescriptor::s2a(1)};
    return {FreeActionDescriptor::s2a(s), FreeActionDescriptor::t1_anti(s - 1)};
}

} // namespace c2surf
