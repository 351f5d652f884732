#include "qaw/awcore.hpp"
#include "qaw/families.hpp"
#include "qaw/structure.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace qaw {
namespace {

TEST(Expand, Examples) {
    const OPSFamily fam = counterexample_family();
    const auto e3 = expand_in_basis(fam.poly(3), fam);
    ASSERT_EQ(e3.size(), 4U);
    EXPECT_TRUE(e3[0].is_zero());
    EXPECT_TRUE(e3[1].is_zero());
    EXPECT_TRUE(e3[2].is_zero());
    EXPECT_EQ(e3[3], Scalar(1));
    const auto ex = expand_in_basis(XPoly::x(), fam);
    ASSERT_EQ(ex.size(), 2U);
    EXPECT_EQ(ex[0], fam.rec_a(0));
    EXPECT_EQ(ex[1], Scalar(1));
    EXPECT_TRUE(expand_in_basis(XPoly(), fam).empty());
}

TEST(Expand, ResumReturnsInput) {
    testing::Generator gen(41);
    const OPSFamily fam = counterexample_family();
    for (int i = 0; i < 15; ++i) {
        const XPoly f = gen.xpoly(10);
        const auto e = expand_in_basis(f, fam);
        XPoly sum;
        for (std::size_t k = 0; k < e.size(); ++k) {
            sum += e[k] * fam.poly(static_cast<int>(k));
        }
        EXPECT_EQ(sum, f);
    }
}

TEST(Relation, IndexZeroIsEmpty) {
    const auto r = structure_relation(counterexample_family(), u2(), 0);
    EXPECT_TRUE(r.bandwidth.empty);
    for (const auto& [offset, c] : r.coefficients) {
        EXPECT_TRUE(c.is_zero()) << offset;
    }
}

TEST(Relation, IndexOne) {
    const auto r = structure_relation(counterexample_family(), u2(), 1);
    const Scalar alpha = OperatorContext::instance().alpha();
    EXPECT_EQ(r.coefficients.at(1), alpha * alpha - Scalar(1));
    EXPECT_FALSE(r.bandwidth.empty);
    EXPECT_LE(r.bandwidth.r, 1);
    EXPECT_LE(r.bandwidth.s, 1);
}

TEST(Relation, IndexFive) {
    const auto r = structure_relation(counterexample_family(), u2(), 5);
    EXPECT_EQ(r.bandwidth.r, 2);
    EXPECT_EQ(r.bandwidth.s, 1);
    EXPECT_FALSE(r.coefficients.at(-2).is_zero());
    const CoeffSuite s = coeff_suite(false, 5);
    EXPECT_EQ(r.coefficients.at(1), s.c_n1);
    EXPECT_EQ(r.coefficients.at(0), s.c_n2);
    EXPECT_EQ(r.coefficients.at(-1), s.c_n3);
    EXPECT_EQ(r.coefficients.at(-2), s.c_n4);
}

TEST(Relation, OffsetMinusTwoAtIndexTwo) {
    const auto r = structure_relation(counterexample_family(), u2(), 2);
    const CoeffSuite s = coeff_suite(false, 2);
    const Scalar alpha = OperatorContext::instance().alpha();
    const Scalar expected = s.basic_at(-1).c * s.C_n - alpha * s.c_n * s.basic_at(-1).C;
    EXPECT_EQ(r.coefficients.at(-2), expected);
    EXPECT_FALSE(expected.is_zero());
}

TEST(Proposition, BaseCase) {
    const auto r = verify_proposition_at(counterexample_family(), 0);
    EXPECT_TRUE(r.sq.pass);
    EXPECT_TRUE(r.dq.pass);
    EXPECT_EQ(r.sq.coefficients.at(0), Scalar(1));
}

TEST(Proposition, SmallSweep) {
    for (const auto& r : verify_proposition(8)) {
        EXPECT_TRUE(r.sq.pass) << r.sq.n;
        EXPECT_TRUE(r.dq.pass) << r.dq.n;
        EXPECT_TRUE(r.sq.residuals.empty());
        EXPECT_TRUE(r.dq.residuals.empty());
    }
}

TEST(Proposition, ThreadedMatchesSequential) {
    const auto seq = verify_proposition(6, 1);
    const auto par = verify_proposition(6, 3);
    ASSERT_EQ(seq.size(), par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        EXPECT_EQ(par[i].dq.n, static_cast<int>(i));
        EXPECT_EQ(par[i].dq.coefficients, seq[i].dq.coefficients);
        EXPECT_EQ(par[i].sq.coefficients, seq[i].sq.coefficients);
    }
}

TEST(Bandwidth, Scan) {
    const auto summary = bandwidth_scan(counterexample_family(), u2(), 8);
    EXPECT_TRUE(summary.pass);
    EXPECT_EQ(summary.max_r, 2);
    EXPECT_EQ(summary.max_s, 1);
    EXPECT_TRUE(summary.offset_minus2_nonzero);
    EXPECT_TRUE(summary.rows.at(0).bandwidth.empty);
    EXPECT_THROW(bandwidth_scan(counterexample_family(), u2(), 1), std::invalid_argument);
}

TEST(Bandwidth, OfCoefficients) {
    const Bandwidth b = bandwidth_of({{-3, Scalar()}, {-1, Scalar(2)}, {2, Scalar::t()}});
    EXPECT_FALSE(b.empty);
    EXPECT_EQ(b.r, 1);
    EXPECT_EQ(b.s, 2);
    EXPECT_TRUE(bandwidth_of({{0, Scalar()}}).empty);
}

TEST(Bandwidth, C4FactorizationResidualVanishes) {
    EXPECT_TRUE(c4_factorization_residual().is_zero());
}

TEST(Structure, DegreeSanity) {
    const OPSFamily fam = counterexample_family();
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ((u2() * dq_apply(fam.poly(n))).degree(), n + 1);
    }
}

}  // namespace
}  // namespace qaw
