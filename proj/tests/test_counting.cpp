#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace c2surf;

namespace {

struct TableRow {
    int r;
    count_t A, B, phi_minus, phi_plus, phi;
};

// The published table of counts for r <= 15.
const std::vector<TableRow> kTable{
    {2, 3, 5, 3, 2, 5},      {4, 7, 8, 9, 5, 14},     {6, 13, 14, 17, 10, 27},  {8, 22, 20, 28, 16, 44},
    {10, 34, 30, 42, 25, 67}, {12, 50, 40, 60, 35, 95}, {14, 70, 55, 82, 49, 131}, {1, 0, 1, 0, 1, 1},
    {3, 1, 2, 1, 2, 3},       {5, 3, 5, 3, 5, 8},       {7, 7, 8, 7, 8, 15},       {9, 13, 14, 13, 14, 27},
    {11, 22, 20, 22, 20, 42}, {13, 34, 30, 34, 30, 64}, {15, 50, 40, 50, 40, 90},
};

// A(r)+B(r) from the case formulas, independent of the split into A and B.
count_t ab_sum_reference(count_t r) {
    switch (r % 4) {
    case 0: return (r + 4) * (r + 6) * (r + 8) / 64;
    case 1: return (r + 3) * (r + 3) * (r + 3) / 64;
    case 2: return (r + 6) * (r + 6) * (r + 6) / 64;
    default: return (r + 1) * (r + 3) * (r + 5) / 64;
    }
}

} // namespace

TEST(Counting, PublishedTable) {
    for (const auto& row : kTable) {
        const CountReport rep = phi_counts(row.r);
        EXPECT_EQ(rep.A, row.A) << row.r;
        EXPECT_EQ(rep.B, row.B) << row.r;
        EXPECT_EQ(rep.phi_minus, row.phi_minus) << row.r;
        EXPECT_EQ(rep.phi_plus, row.phi_plus) << row.r;
        EXPECT_EQ(rep.phi, row.phi) << row.r;
        EXPECT_EQ(rep.total, row.phi + 1) << row.r;
    }
}

TEST(Counting, OperationExamples) {
    EXPECT_EQ(A_direct(2), 3);
    EXPECT_EQ(A_direct(1), 0);
    EXPECT_EQ(A_direct(7), 7);
    EXPECT_EQ(A_closed(8), 22);
    EXPECT_EQ(A_closed(5), 3);
    EXPECT_EQ(A_closed(12), 50);
    EXPECT_EQ(A_recursive(4), 7);
    EXPECT_EQ(A_recursive(3), 1);
    EXPECT_EQ(A_recursive(6), 13);
    EXPECT_EQ(B_direct(2), 5);
    EXPECT_EQ(B_closed(6), 14);
    EXPECT_EQ(B_recursive(7), 8);
    EXPECT_EQ(B_closed(14), 55);
    EXPECT_EQ(phi_counts(13).phi, 64);
}

TEST(Counting, ThreeWayAgreementTo2000) {
    const DirectCounts d = direct_counts(2000);
    for (int r = 1; r <= 2000; ++r) {
        const auto i = static_cast<std::size_t>(r);
        ASSERT_EQ(d.A[i], A_closed(r)) << r;
        ASSERT_EQ(d.A[i], A_recursive(r)) << r;
        ASSERT_EQ(d.B[i], B_closed(r)) << r;
        ASSERT_EQ(d.B[i], B_recursive(r)) << r;
        ASSERT_EQ(A_closed(r) + B_closed(r), AB_sum_closed(r)) << r;
        ASSERT_EQ(AB_sum_closed(r), ab_sum_reference(r)) << r;
    }
}

TEST(Counting, TripleLoopOracle) {
    for (int r = 1; r <= 80; ++r) {
        EXPECT_EQ(A_direct(r), oracle::A(r)) << r;
        EXPECT_EQ(B_direct(r), oracle::B(r)) << r;
    }
}

TEST(Counting, TotalCount) {
    EXPECT_EQ(total_count(Surface::torus(5)), 14);
    EXPECT_EQ(total_count(Surface::nonorientable(2)), 6);
    EXPECT_EQ(total_count(Surface::nonorientable(7)), 16);
    EXPECT_EQ(total_count(Surface::torus(0)), 4);
    const DirectCounts d = direct_counts(2000);
    for (int r = 1; r <= 2000; ++r) {
        const auto i = static_cast<std::size_t>(r);
        ASSERT_EQ(total_count(Surface::nonorientable(r)), phi_counts(r, d.A[i], d.B[i]).total) << r;
    }
}

TEST(Counting, OddPhiIsCubic) {
    for (int r = 1; r <= 401; r += 2) {
        const count_t x = r;
        const count_t want = r % 4 == 1 ? (x + 3) * (x + 3) * (x + 3) / 64 : (x + 1) * (x + 3) * (x + 5) / 64;
        EXPECT_EQ(phi_counts(r).phi, want) << r;
    }
}

TEST(Counting, ReportInvariants) {
    for (int r = 1; r <= 300; ++r) {
        const CountReport rep = phi_counts(r);
        EXPECT_EQ(rep.phi, rep.phi_minus + rep.phi_plus);
        EXPECT_EQ(rep.total, rep.phi + 1);
        EXPECT_EQ(rep.r, r);
    }
}

TEST(Counting, Errors) {
    EXPECT_THROW(phi_counts(0), DomainError);
    EXPECT_THROW(A_closed(-3), DomainError);
    EXPECT_THROW(B_recursive(0), DomainError);
    // The consistency check rejects a tampered direct count.
    EXPECT_THROW(phi_counts(6, 14, 14), std::logic_error);
}
