#include "qaw/families.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <thread>

namespace qaw {
namespace {

const Scalar t = Scalar::t();
const Scalar u = Scalar::u();
const XPoly x = XPoly::x();

TEST(Counterexample, FirstPolynomials) {
    const OPSFamily fam = counterexample_family();
    EXPECT_EQ(fam.poly(0), XPoly(1));
    EXPECT_EQ(fam.poly(1).to_string(), "x - t");
    EXPECT_TRUE(fam.poly(-1).is_zero());
    const Scalar B0 = fam.rec_a(0);
    const Scalar B1 = fam.rec_a(1);
    const Scalar C1 = fam.rec_b(1);
    EXPECT_EQ(fam.poly(2), x * x - XPoly::monomial(B0 + B1, 1) + XPoly(B0 * B1 - C1));
    EXPECT_EQ(fam.poly(2),
              XPoly::parse("t^6/2 - t^5*x/2 + t^4/2 - t^3*x + t^2/2 - t*x/2 + x^2 - 1/2"));
    EXPECT_EQ(fam.poly(3),
              XPoly::parse("-t^15/4 + t^14*x/4 - t^13/4 + t^12*x/2 - t^11/2 + 3*t^10*x/4 - t^9*x^2/2"
                           " - t^9/4 + 3*t^8*x/4 - t^7*x^2/2 - t^7/4 + 3*t^6*x/4 - t^5*x^2 + t^5/4"
                           " + t^4*x/2 - t^3*x^2/2 + t^2*x/4 - t*x^2/2 + t/4 + x^3 - 3*x/4"));
}

TEST(Counterexample, RecurrenceExamples) {
    const OPSFamily fam = counterexample_family();
    EXPECT_EQ(fam.rec_a(0), t);
    EXPECT_EQ(fam.rec_b(1), Scalar::parse("(1 - t^2)^2/2"));
    EXPECT_TRUE(fam.rec_b(0).is_zero());
    EXPECT_EQ(fam.rec_a(1), Scalar::parse("t^5/2 + t^3 - t/2"));
    EXPECT_EQ(fam.rec_b(1), Scalar::parse("t^4/2 - t^2 + 1/2"));
}

TEST(DualQHahn, Examples) {
    const OPSFamily fam = dual_qhahn_family(counterexample_params());
    EXPECT_TRUE(fam.rec_b(0).is_zero());
    EXPECT_EQ(fam.rec_a(0), t);
    EXPECT_EQ(fam.rec_b(1), Scalar::parse("(1 - t^2)^2/2"));
    FamilyParams bad = counterexample_params();
    bad.base = 1;
    EXPECT_THROW(dual_qhahn_family(bad), std::invalid_argument);
}

TEST(DualQHahn, MatchesClosedFormsPerIndex) {
    const OPSFamily h = dual_qhahn_family(counterexample_params());
    const OPSFamily p = counterexample_family();
    for (int n = 0; n <= 40; ++n) {
        EXPECT_EQ(h.rec_a(n), p.rec_a(n)) << "n = " << n;
        EXPECT_EQ(h.rec_b(n), p.rec_b(n)) << "n = " << n;
    }
}

TEST(DualQHahn, MatchesClosedFormsSymbolically) {
    // base^n = q^(n/2) = u for base = t^2.
    const auto [a_n, b_n] = dual_qhahn_coefficients(counterexample_params(), u);
    const BasicCoefficients bc = basic_coefficients(u);
    EXPECT_EQ(a_n, bc.B);
    EXPECT_EQ(b_n, bc.C);
}

TEST(CoeffSuite, Examples) {
    const CoeffSuite s0 = coeff_suite(false, 0);
    EXPECT_TRUE(s0.c_n.is_zero());
    EXPECT_EQ(s0.alpha_n, Scalar(1));
    const CoeffSuite s1 = coeff_suite(false, 1);
    EXPECT_EQ(s1.gamma_n, Scalar(1));
    const Scalar alpha = s1.alpha_n;
    EXPECT_TRUE((s1.c_n - alpha * s0.c_n + (Scalar(1) - alpha) * s0.alpha_n * s0.B_n).is_zero());
}

TEST(CoeffSuite, SymbolicInstantiatesToConcrete) {
    const CoeffSuite sym = coeff_suite(true);
    for (int n : {2, 3, 7}) {
        const CoeffSuite c = coeff_suite(false, n);
        EXPECT_EQ(sym.B_n.instantiate_n(n), c.B_n);
        EXPECT_EQ(sym.C_n.instantiate_n(n), c.C_n);
        EXPECT_EQ(sym.c_n4.instantiate_n(n), c.c_n4);
        EXPECT_EQ(sym.d_k3.instantiate_n(n), c.d_k3);
        EXPECT_EQ(sym.basic_at(-2).C.instantiate_n(n), c.basic_at(-2).C);
    }
    EXPECT_THROW((void)sym.basic_at(3), std::out_of_range);
}

TEST(CoeffSuite, FrozenValues) {
    const CoeffSuite s = coeff_suite(false, 2);
    EXPECT_EQ(s.c_n4, Scalar::parse("t^15/16 - t^13/16 - 3*t^11/16 + t^9/8 + t^7/4 - t^3/4 - t/8"
                                    " + 3/(16*t) + 1/(16*t^3) - 1/(16*t^5)"));
}

TEST(CoeffSuite, PositiveCAtSampledQ) {
    const CoeffSuite sym = coeff_suite(true);
    for (double q : {0.3, 0.7}) {
        for (int n = 1; n <= 20; ++n) {
            EXPECT_GT(sym.C_n.eval(q, n), 0.0) << "q = " << q << ", n = " << n;
        }
    }
}

TEST(QPochhammer, Examples) {
    const Scalar a = Scalar::parse("t^3 + u");
    const Scalar q = t * t;
    EXPECT_EQ(qpochhammer(a, q, 0), Scalar(1));
    EXPECT_EQ(qpochhammer(q, q, 1), Scalar(1) - q);
    EXPECT_EQ(qpochhammer(a, q, 2), (Scalar(1) - a) * (Scalar(1) - a * q));
}

TEST(AwHyp, Examples) {
    const FamilyParams p = counterexample_params();
    EXPECT_EQ(aw_hyp_poly(0, p.a, p.b, p.c, 0, p.base), XPoly(1));
    EXPECT_EQ(aw_hyp_poly(1, p.a, p.b, p.c, 0, p.base), x - XPoly(t));
    const XPoly p4 = aw_hyp_poly(4, p.a, p.b, p.c, 0, p.base);
    EXPECT_EQ(p4.degree(), 4);
    EXPECT_EQ(p4.leading(), Scalar(1));
}

TEST(AwHyp, OracleAgreement) {
    for (const auto& params : {counterexample_params(), generic_params()}) {
        const auto rows = oracle_agreement(params, 6);
        ASSERT_EQ(rows.size(), 7U);
        for (const auto& row : rows) {
            EXPECT_TRUE(row.equal) << "n = " << row.n;
        }
    }
}

TEST(AwHyp, GenericFourParameterIsMonic) {
    // d != 0 exercises the full 4phi3 with the abcd q^(n-1) factor.
    const XPoly p = aw_hyp_poly(3, t, t * t, -t, t.pow(3), t.pow(4));
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.leading(), Scalar(1));
}

TEST(Families, MonicAndDegree) {
    const auto polys = ttrr_polys(counterexample_family(), 12);
    ASSERT_EQ(polys.size(), 13U);
    for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(polys[n].degree(), n);
        EXPECT_EQ(polys[n].leading(), Scalar(1));
    }
}

TEST(Families, ConcurrentCacheAccess) {
    const OPSFamily shared = counterexample_family();
    const OPSFamily fresh = counterexample_family();
    std::vector<std::thread> workers;
    std::vector<bool> ok(4, false);
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            bool good = true;
            for (int n = 14 - w; n >= 0; n -= 1) {
                good = good && shared.poly(n).degree() == n;
            }
            ok[w] = good;
        });
    }
    for (auto& th : workers) {
        th.join();
    }
    for (int w = 0; w < 4; ++w) {
        EXPECT_TRUE(ok[w]);
    }
    for (int n = 0; n <= 14; ++n) {
        EXPECT_EQ(shared.poly(n), fresh.poly(n));
    }
}

}  // namespace
}  // namespace qaw
