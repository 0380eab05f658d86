#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace c2surf;

namespace {

F2Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1);
        if (is_invertible(m)) return m;
    }
}

} // namespace

TEST(BilinearSpace, Classification) {
    EXPECT_EQ(classify_space(standard_space(StandardForm::Symplectic, 4)), FormKind::SYMP);
    EXPECT_EQ(classify_space(standard_space(StandardForm::Orthogonal, 3)), FormKind::ODDO);
    EXPECT_EQ(classify_space(standard_space(StandardForm::Orthogonal, 2)), FormKind::EVO);
}

TEST(BilinearSpace, RejectsBadGrams) {
    EXPECT_THROW(BilinearSpace(F2Matrix{{1, 1}, {0, 1}}), DomainError);
    EXPECT_THROW(BilinearSpace(F2Matrix{{1, 1}, {1, 1}}), DomainError);
    EXPECT_THROW(BilinearSpace(F2Matrix(2, 3)), DomainError);
    EXPECT_THROW(standard_space(StandardForm::Symplectic, 3), DomainError);
}

TEST(BilinearSpace, StandardGrams) {
    EXPECT_EQ(standard_space(StandardForm::Orthogonal, 3).gram(), F2Matrix::identity(3));
    const F2Matrix want{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    EXPECT_EQ(standard_space(StandardForm::Symplectic, 4).gram(), want);
}

TEST(Omega, Examples) {
    EXPECT_EQ(omega_vector(standard_space(StandardForm::Orthogonal, 5)), F2Vector::ones(5));
    EXPECT_TRUE(omega_vector(standard_space(StandardForm::Symplectic, 6)).is_zero());
    // a.b = c.c = 1, all other products zero.
    const BilinearSpace n3(F2Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    const F2Vector omega = omega_vector(n3);
    EXPECT_EQ(n3.gram().apply(omega.word()), 0b100u);
    for (std::uint64_t v = 0; v < 8; ++v) EXPECT_EQ(n3.b(v, omega.word()), n3.b(v, v));
}

TEST(Omega, CharacterizingPropertyOnRandomBases) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 10;
        const F2Matrix p = random_invertible(rng, n);
        const BilinearSpace base = (n % 2 == 0 && (rng() & 1)) ? standard_space(StandardForm::Symplectic, n)
                                                               : standard_space(StandardForm::Orthogonal, n);
        const BilinearSpace v(p.transpose() * base.gram() * p);
        const std::uint64_t omega = omega_vector(v).word();
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) ASSERT_EQ(v.b(x, omega), v.b(x, x));
        EXPECT_EQ(classify_space(v), classify_space(base));
    }
}

TEST(Omega, FixedByEveryIsometry) {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto v = standard_space(StandardForm::Orthogonal, n);
        const std::uint64_t omega = omega_vector(v).word();
        for (const auto& m : enumerate_isometries(v)) EXPECT_EQ(m.apply(omega), omega);
    }
}

TEST(Involution, Validation) {
    const auto evo2 = standard_space(StandardForm::Orthogonal, 2);
    EXPECT_NO_THROW(make_involution(evo2, F2Matrix{{0, 1}, {1, 0}}));
    try {
        make_involution(evo2, F2Matrix{{1, 1}, {0, 1}});
        FAIL() << "expected an error";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("not an isometry"), std::string::npos);
    }
    EXPECT_NO_THROW(make_involution(standard_space(StandardForm::Symplectic, 2), F2Matrix{{1, 1}, {0, 1}}));
    // An order-3 symplectic isometry.
    try {
        make_involution(standard_space(StandardForm::Symplectic, 2), F2Matrix{{0, 1}, {1, 1}});
        FAIL() << "expected an error";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("not of order 2"), std::string::npos);
    }
}
