#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "bilinear.hpp"
#include "classifier.hpp"
#include "counting.hpp"
#include "dd.hpp"
#include "gl2.hpp"
#include "isometry.hpp"
#include "orbits.hpp"

namespace c2surf {

struct VerifyResult {
    bool ok = true;
    std::string detail;          // summary on success
    std::string counterexample;  // first failure

    void fail(const std::string& what) {
        if (ok) counterexample = what;
        ok = false;
    }
};

// ---- DD completeness ----

struct ConjugacyCensus {
    std::size_t group_order = 0;
    std::size_t involutions = 0;
    std::vector<std::vector<std::uint64_t>> classes;  // packed involutions per conjugacy class
};

// Conjugacy classes of involutions in Iso(V), by orbit of each class
// representative under every group element.
inline ConjugacyCensus involution_classes(const BilinearSpace& v, std::size_t bound = kDefaultOracleBound) {
    const unsigned n = static_cast<unsigned>(v.dim());
    const std::vector<std::uint64_t> group = isometry_codes(v, bound);
    const std::uint64_t id = packed::identity(n), g = v.gram().pack(), ginv = inverse(v.gram()).pack();
    ConjugacyCensus out;
    out.group_order = group.size();
    std::vector<std::uint64_t> invs;
    for (auto m : group)
        if (packed::mul(m, m, n) == id) invs.push_back(m);
    out.involutions = invs.size();
    std::unordered_map<std::uint64_t, std::size_t> cls;
    for (auto s : invs) {
        if (cls.count(s)) continue;
        const std::size_t k = out.classes.size();
        out.classes.emplace_back();
        for (auto p : group) {
            // P^-1 = G^-1 P^T G for an isometry P.
            const std::uint64_t pinv = packed::mul(packed::mul(ginv, packed::transpose(p, n), n), g, n);
            const std::uint64_t c = packed::mul(packed::mul(pinv, s, n), p, n);
            if (cls.emplace(c, k).second) out.classes[k].push_back(c);
        }
    }
    return out;
}

// Conjugacy and DD equality define the same partition of the involutions.
inline VerifyResult verify_dd_space(const BilinearSpace& v, std::size_t bound = kDefaultOracleBound) {
    VerifyResult res;
    const ConjugacyCensus census = involution_classes(v, bound);
    std::map<DDTuple, std::size_t> seen;
    for (std::size_t k = 0; k < census.classes.size(); ++k) {
        std::optional<DDTuple> value;
        for (auto code : census.classes[k]) {
            const DDTuple d = dd(make_involution(v, F2Matrix::unpack(v.dim(), code)));
            if (!value) value = d;
            else if (d != *value)
                res.fail("conjugate involutions with DD " + value->str() + " and " + d.str() + " in gram " + v.gram().str());
        }
        if (value && !seen.emplace(*value, k).second)
            res.fail("two conjugacy classes share DD " + value->str() + " in gram " + v.gram().str());
    }
    res.detail = "gram " + v.gram().str() + ": |Iso| = " + std::to_string(census.group_order) + ", " +
                 std::to_string(census.involutions) + " involutions, " + std::to_string(census.classes.size()) + " classes";
    return res;
}

inline std::vector<BilinearSpace> dd_test_spaces(std::size_t min_dim, std::size_t max_dim) {
    std::vector<BilinearSpace> out;
    for (std::size_t n = min_dim; n <= max_dim; ++n) {
        out.push_back(standard_space(StandardForm::Orthogonal, n));
        if (n % 2 == 0) out.push_back(standard_space(StandardForm::Symplectic, n));
    }
    return out;
}

inline VerifyResult verify_dd(std::size_t max_dim, std::size_t bound = kDefaultOracleBound) {
    VerifyResult res;
    for (const auto& v : dd_test_spaces(2, max_dim)) {
        VerifyResult r = verify_dd_space(v, bound);
        if (!r.ok) res.fail(r.counterexample);
        res.detail += r.detail + "\n";
    }
    return res;
}

// ---- counting ----

inline VerifyResult verify_counts(int max_r, int max_enumerate_r = 300) {
    VerifyResult res;
    const DirectCounts d = direct_counts(max_r);
    for (int r = 1; r <= max_r; ++r) {
        const auto i = static_cast<std::size_t>(r);
        try {
            const CountReport rep = phi_counts(r, d.A[i], d.B[i]);
            if (rep.A + rep.B != AB_sum_closed(r)) res.fail("A+B mismatch at r=" + std::to_string(r));
            if (rep.total != total_count(Surface::nonorientable(r))) res.fail("total mismatch at r=" + std::to_string(r));
            if (r <= max_enumerate_r &&
                static_cast<count_t>(enumerate_nonorientable(r).size()) != rep.total)
                res.fail("enumeration size mismatch at r=" + std::to_string(r));
        } catch (const std::exception& e) {
            res.fail(e.what());
        }
    }
    res.detail = "r = 1.." + std::to_string(max_r) + ": direct, closed and recursive counts agree";
    return res;
}

// ---- orbits and generators ----

inline VerifyResult verify_orbits(std::size_t n, std::size_t bound = kDefaultOracleBound) {
    VerifyResult res;
    auto check = [&](StandardForm kind, std::size_t dim) {
        const auto orbits = orbit_partition(standard_space(kind, dim), bound);
        const std::size_t expect = kind == StandardForm::Symplectic ? 2 : (dim == 2 ? 3 : 4);
        const std::string name = std::string(kind == StandardForm::Symplectic ? "symplectic" : "orthogonal") + "," +
                                 std::to_string(dim);
        if (orbits.size() != expect)
            res.fail("census (" + name + ") = " + std::to_string(orbits.size()) + ", expected " + std::to_string(expect));
        // Each orbit carries exactly one label.
        std::map<int, std::size_t> label_orbit;
        for (std::size_t k = 0; k < orbits.size(); ++k)
            for (auto x : orbits[k]) {
                const F2Vector v = F2Vector::from_word(dim, x);
                const int label = kind == StandardForm::Symplectic ? static_cast<int>(symplectic_orbit(v))
                                                                   : static_cast<int>(orthogonal_orbit(v));
                auto [it, fresh] = label_orbit.emplace(label, k);
                if (!fresh && it->second != k) res.fail("label split across orbits at " + v.str() + " (" + name + ")");
            }
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            std::size_t hits = 0;
            for (const auto& [label, orbit] : label_orbit) hits += orbit == k;
            if (hits != 1) res.fail("orbit " + std::to_string(k) + " carries " + std::to_string(hits) + " labels (" + name + ")");
        }
        res.detail += "census (" + name + ") = " + std::to_string(orbits.size()) + "\n";
    };
    for (std::size_t d = 2; d <= n; ++d) {
        check(StandardForm::Orthogonal, d);
        if (d % 2 == 0) check(StandardForm::Symplectic, d);
    }
    return res;
}

inline VerifyResult verify_generators(std::size_t n, std::size_t bound = kDefaultOracleBound) {
    VerifyResult res;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!verify_orthogonal_generators(k, bound)) res.fail("closure differs from O(" + std::to_string(k) + ")");
        res.detail += "O(" + std::to_string(k) + "): closure of generators is the full group\n";
    }
    return res;
}

// ---- GL2 ----

// Product of `len` random elementary conjugators with |lambda| <= 3.
inline IntMatrix2 random_gl2_word(std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> kind(0, 3), lam(-3, 3);
    IntMatrix2 q = IntMatrix2::identity();
    for (int i = 0; i < len; ++i) {
        switch (kind(rng)) {
        case 0: q = q * relation1(); break;
        case 1: q = q * relation2(lam(rng)); break;
        case 2: q = q * relation3(lam(rng)); break;
        default: q = q * relation4(); break;
        }
    }
    return q;
}

inline VerifyResult verify_gl2(int samples, std::uint64_t seed, int max_len = 8) {
    VerifyResult res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, max_len), coin(0, 1), lam(-2, 2);
    int checked_count = 0;
    for (int i = 0; i < samples && res.ok; ++i) {
        const Gl2Class want = coin(rng) ? Gl2Class::Sclass : Gl2Class::Tclass;
        const IntMatrix2 q = random_gl2_word(rng, len(rng));
        const IntMatrix2 m = conjugate(q, representative(want));
        try {
            if (gl2_class(m) != want) {
                res.fail("parity rule misclassifies " + m.str());
                break;
            }
            const Gl2Reduction red = gl2_reduce(m);
            if (red.rep != want || conjugate(red.P, representative(red.rep)) != m)
                res.fail("witness does not verify for " + m.str());
            if (gl2_reduce_by_relations(m).rep != gl2_class(m)) res.fail("parity rule and reduction disagree on " + m.str());
            for (const IntMatrix2& e : {relation1(), relation2(lam(rng)), relation3(lam(rng)), relation4()})
                if (gl2_class(conjugate(e, m)) != want) res.fail("relation changes the class of " + m.str());
        } catch (const std::exception& e) {
            res.fail(std::string(e.what()) + " on " + m.str());
        }
        ++checked_count;
    }
    res.detail = std::to_string(checked_count) + " random conjugates of S and T classified with verified witnesses";
    return res;
}

} // namespace c2surf
