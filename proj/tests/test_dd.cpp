#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

#include <c2surf/verify.hpp>

using namespace c2surf;

namespace {

std::vector<Involution> all_involutions(const BilinearSpace& v) {
    std::vector<Involution> out;
    for (const auto& m : enumerate_isometries(v))
        if ((m * m).is_identity()) out.push_back(make_involution(v, m));
    return out;
}

// r disjoint swaps of orthonormal pairs.
F2Matrix block_swaps(std::size_t r) {
    F2Matrix m(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        m.set(2 * i, 2 * i + 1, true);
        m.set(2 * i + 1, 2 * i, true);
    }
    return m;
}

} // namespace

TEST(DInvariant, Examples) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto v = standard_space(StandardForm::Orthogonal, n);
        EXPECT_EQ(d_invariant(make_involution(v, F2Matrix::identity(n))), 0);
    }
    EXPECT_EQ(d_invariant(make_involution(standard_space(StandardForm::Orthogonal, 2), block_swaps(1))), 1);
    for (std::size_t r = 1; r <= 4; ++r)
        EXPECT_EQ(d_invariant(make_involution(standard_space(StandardForm::Orthogonal, 2 * r), block_swaps(r))),
                  static_cast<int>(r));
}

TEST(AlphaInvariant, Examples) {
    for (std::size_t r = 1; r <= 4; ++r)
        EXPECT_EQ(alpha_invariant(make_involution(standard_space(StandardForm::Orthogonal, 2 * r), block_swaps(r))), 0);
    EXPECT_EQ(alpha_invariant(make_involution(standard_space(StandardForm::Orthogonal, 4), F2Matrix::identity(4))), 1);
    EXPECT_EQ(alpha_invariant(make_involution(standard_space(StandardForm::Symplectic, 4), F2Matrix::identity(4))), 0);
    // On odd orthogonal spaces the identity has alpha 0 once restricted to <Omega>^perp.
    EXPECT_EQ(alpha_invariant(make_involution(standard_space(StandardForm::Orthogonal, 3), F2Matrix::identity(3))), 0);
}

TEST(AlphaInvariant, MatchesBruteFunctionalRank) {
    for (const auto& v : dd_test_spaces(2, 5))
        for (const auto& s : all_involutions(v)) {
            const std::uint64_t omega = omega_vector(v).word();
            int any = 0;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << v.dim()); ++x) {
                if (v.dim() % 2 && v.b(x, omega)) continue;
                any |= v.b(x, s.matrix().apply(x));
            }
            EXPECT_EQ(alpha_invariant(s), any) << s.matrix().str();
        }
}

TEST(Mirror, Examples) {
    const auto evo2 = standard_space(StandardForm::Orthogonal, 2);
    EXPECT_EQ(mirror(make_involution(evo2, block_swaps(1))).matrix(), F2Matrix::identity(2));
    const auto sym = make_involution(standard_space(StandardForm::Symplectic, 2), F2Matrix{{1, 1}, {0, 1}});
    EXPECT_EQ(mirror(sym), sym);
    const auto odd = make_involution(standard_space(StandardForm::Orthogonal, 3), F2Matrix::identity(3));
    EXPECT_EQ(mirror(odd), odd);
}

TEST(Mirror, FlipAgreesWithFormulaAndSquaresToIdentity) {
    for (std::size_t n : {2u, 4u, 6u}) {
        const auto v = standard_space(StandardForm::Orthogonal, n);
        for (const auto& s : all_involutions(v)) {
            const Involution m = mirror(s);
            EXPECT_EQ(m.matrix(), mirror_matrix_formula(s));
            EXPECT_EQ(mirror(m), s);
        }
    }
    // A non-orthonormal even form: hyperbolic plane plus an orthonormal pair.
    const BilinearSpace v(F2Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    ASSERT_EQ(classify_space(v), FormKind::EVO);
    for (const auto& s : all_involutions(v)) EXPECT_EQ(mirror(mirror(s)), s);
}

TEST(DD, Examples) {
    EXPECT_EQ(dd(make_involution(standard_space(StandardForm::Orthogonal, 2), F2Matrix::identity(2))),
              (DDTuple{0, 1, 1, 0}));
    // Klein bottle, S2a+DCC: the two orthonormal classes are swapped.
    EXPECT_EQ(dd(make_involution(standard_space(StandardForm::Orthogonal, 2), block_swaps(1))), (DDTuple{1, 0, 0, 1}));
    // Torus, S2a+S10AT: a -> a, b -> a+b in a symplectic basis.
    EXPECT_EQ(dd(make_involution(standard_space(StandardForm::Symplectic, 2), F2Matrix{{1, 1}, {0, 1}})),
              (DDTuple{1, 1, 1, 1}));
}

TEST(DD, StructuralBounds) {
    for (const auto& v : dd_test_spaces(2, 5))
        for (const auto& s : all_involutions(v)) {
            const DDTuple t = dd(s);
            EXPECT_GE(t.d, 0);
            EXPECT_LE(t.d, static_cast<int>(v.dim() / 2));
            if (classify_space(v) != FormKind::EVO) {
                EXPECT_EQ(t.d_tilde, t.d);
                EXPECT_EQ(t.alpha_tilde, t.alpha);
            }
        }
}

TEST(DD, ConjugationInvariant) {
    std::mt19937_64 rng(17);
    for (const auto& v : dd_test_spaces(2, 5)) {
        const auto group = enumerate_isometries(v);
        for (const auto& s : all_involutions(v))
            for (int t = 0; t < 5; ++t) {
                const F2Matrix& p = group[rng() % group.size()];
                EXPECT_EQ(dd(make_involution(v, inverse(p) * s.matrix() * p)), dd(s));
            }
    }
}

TEST(DD, DirectSumFormula) {
    EXPECT_EQ(dd_direct_sum({0, 0, 0, 0}, 1), (DDTuple{1, 0, 0, 1}));
    EXPECT_EQ(dd_direct_sum({0, 0, 0, 0}, 2), (DDTuple{2, 0, 2, 1}));
    EXPECT_EQ(dd_direct_sum({1, 1, 1, 1}, 3), (DDTuple{4, 1, 3, 1}));
    EXPECT_THROW(dd_direct_sum({0, 1, 1, 0}, 1), DomainError);
    EXPECT_THROW(dd_direct_sum({0, 0, 0, 0}, 0), DomainError);
}

TEST(DD, DirectSumFormulaMatchesMatrices) {
    // sigma on a symplectic plane or 4-space, plus r swaps on an orthonormal 2r-space.
    for (std::size_t sd : {2u, 4u})
        for (std::size_t r = 1; 2 * r + sd <= 8; ++r) {
            const auto sym = standard_space(StandardForm::Symplectic, sd);
            for (const auto& s : all_involutions(sym)) {
                const std::size_t n = sd + 2 * r;
                F2Matrix g(n, n), m(n, n);
                for (std::size_t i = 0; i < sd; ++i)
                    for (std::size_t j = 0; j < sd; ++j) {
                        g.set(i, j, sym.gram().get(i, j));
                        m.set(i, j, s.matrix().get(i, j));
                    }
                for (std::size_t i = 0; i < 2 * r; ++i) {
                    g.set(sd + i, sd + i, true);
                    m.set(sd + i, sd + (i ^ 1u), true);
                }
                const Involution sum = make_involution(BilinearSpace(g), m);
                EXPECT_EQ(dd(sum), dd_direct_sum(dd(s), static_cast<int>(r))) << s.matrix().str() << " r=" << r;
            }
        }
}

TEST(ConjugacyOracle, Examples) {
    const auto evo2 = standard_space(StandardForm::Orthogonal, 2);
    const auto id = make_involution(evo2, F2Matrix::identity(2)), sw = make_involution(evo2, block_swaps(1));
    EXPECT_TRUE(conjugacy_oracle(sw, sw));
    EXPECT_FALSE(conjugacy_oracle(id, sw));
    // A conjugate by a fixed isometry of the EVO 4-space.
    const auto evo4 = standard_space(StandardForm::Orthogonal, 4);
    const F2Matrix cyc{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    const F2Matrix a = F2Matrix{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}} * cyc;
    const F2Matrix s{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    const F2Matrix t = inverse(a) * s * a;
    ASSERT_NE(t, s);
    const auto si = make_involution(evo4, s), ti = make_involution(evo4, t);
    EXPECT_EQ(dd(si), dd(ti));
    EXPECT_TRUE(conjugacy_oracle(si, ti));
    EXPECT_THROW(conjugacy_oracle(si, ti, 3), BoundError);
}

TEST(DDCompleteness, PairwiseOracleUpToDim4) {
    for (const auto& v : dd_test_spaces(2, 4)) {
        const auto invs = all_involutions(v);
        for (std::size_t i = 0; i < invs.size(); ++i)
            for (std::size_t j = i; j < invs.size(); ++j)
                ASSERT_EQ(conjugacy_oracle(invs[i], invs[j]), dd(invs[i]) == dd(invs[j]))
                    << invs[i].matrix().str() << " vs " << invs[j].matrix().str();
    }
}

TEST(DDCompleteness, ClassPartitionUpToDim5) {
    const VerifyResult r = verify_dd(5);
    EXPECT_TRUE(r.ok) << r.counterexample;
}

TEST(DDCompleteness, NonStandardGrams) {
    const BilinearSpace v(F2Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    EXPECT_TRUE(verify_dd_space(v).ok);
    const BilinearSpace w(F2Matrix{{1, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    EXPECT_TRUE(verify_dd_space(w).ok);
}
