#include "qaw/inductor.hpp"

#include "qaw/awcore.hpp"
#include "qaw/families.hpp"

#include <functional>

namespace qaw {

namespace {

using SuiteIdentity = std::pair<std::string, std::function<Scalar(const CoeffSuite&)>>;

const Scalar& alpha() { return OperatorContext::instance().alpha(); }

std::vector<SuiteIdentity> sq_identities() {
    return {
        {"sq.c3_combination",
         [](const CoeffSuite& s) {
             const auto& bm1 = s.basic_at(-1);
             return s.c_n3 + (alpha() * s.alpha_n - bm1.alpha) * s.C_n +
                    (alpha() * bm1.B - s.B_n) * s.c_n;
         }},
        {"sq.c4_combination",
         [](const CoeffSuite& s) {
             const auto& bm1 = s.basic_at(-1);
             return s.c_n4 + alpha() * s.c_n * bm1.C - bm1.c * s.C_n;
         }},
        {"sq.alpha_next",
         [](const CoeffSuite& s) { return s.basic_at(1).alpha - s.c_n1 - alpha() * s.alpha_n; }},
        {"sq.c_next",
         [](const CoeffSuite& s) {
             return s.basic_at(1).c - s.c_n2 - alpha() * s.c_n -
                    (alpha() - Scalar(1)) * s.alpha_n * s.B_n;
         }},
    };
}

std::vector<SuiteIdentity> dq_identities() {
    return {
        {"dq.d1", [](const CoeffSuite& s) { return s.d_k1 - s.relation_at(1).c1; }},
        {"dq.d2", [](const CoeffSuite& s) { return s.d_k2 - s.relation_at(1).c2; }},
        {"dq.d3", [](const CoeffSuite& s) { return s.d_k3 - s.relation_at(1).c3; }},
        {"dq.d4", [](const CoeffSuite& s) { return s.d_k4 - s.relation_at(1).c4; }},
        {"dq.d5", [](const CoeffSuite& s) { return s.d_k5; }},
        {"dq.d6", [](const CoeffSuite& s) { return s.d_k6; }},
    };
}

std::vector<IdentityCertificate> run(const std::vector<SuiteIdentity>& identities,
                                     const CoeffSuite& suite) {
    std::vector<IdentityCertificate> out;
    out.reserve(identities.size());
    for (const auto& [name, residual] : identities) {
        out.push_back(IdentityCertificate{name, residual(suite), {}});
    }
    return out;
}

}  // namespace

std::vector<IdentityCertificate> certify_sq_step() {
    return run(sq_identities(), coeff_suite(true));
}

std::vector<IdentityCertificate> certify_dq_step() {
    const CoeffSuite suite = coeff_suite(true);
    auto out = run(dq_identities(), suite);
    // The d_{k,3} display multiplies (alpha - 1) c_{k,2} by "B_n". Both the
    // B_k reading and the B_{k+1} reading (n = k + 1) are evaluated.
    const Scalar shifted = suite.d_k3_shifted - suite.relation_at(1).c3;
    auto& d3 = out[2];
    const std::string shifted_verdict = shifted.is_zero() ? "zero" : "nonzero";
    if (d3.zero()) {
        d3.note = "reading B_k; alternative reading B_{k+1} is " + shifted_verdict;
    } else if (shifted.is_zero()) {
        d3.note = "reading B_{k+1}; reading B_k is nonzero";
        d3.residual = shifted;
    } else {
        d3.note = "reading B_k; alternative reading B_{k+1} is also nonzero";
    }
    return out;
}

std::vector<IdentityCertificate> certify_base_case() {
    const CoeffSuite s0 = coeff_suite(false, 0);
    const CoeffSuite s1 = coeff_suite(false, 1);
    const OPSFamily fam = counterexample_family();
    const XPoly& p0 = fam.poly(0);

    std::vector<IdentityCertificate> out;
    out.push_back({"base.c0", s0.c_n, {}});
    out.push_back({"base.alpha0_minus_1", s0.alpha_n - Scalar(1), {}});
    out.push_back({"base.c1_identity",
                   s1.c_n - alpha() * s0.c_n + (Scalar(1) - alpha()) * s0.alpha_n * s0.B_n, {}});
    // S_q P_0 = alpha_0 P_0 + c_0 P_{-1} with P_{-1} = 0.
    const XPoly sq_res = sq_apply(p0) - p0 * s0.alpha_n;
    out.push_back({"base.sq_p0", sq_res.is_zero() ? Scalar() : sq_res.leading(),
                   "leading coefficient of S_q P_0 - alpha_0 P_0"});
    // U_2 D_q P_0 = (alpha^2 - 1) gamma_0 P_1 + 0 P_0.
    const XPoly dq_res = u2() * dq_apply(p0) - fam.poly(1) * s0.c_n1 - p0 * s0.c_n2;
    out.push_back({"base.dq_p0", dq_res.is_zero() ? Scalar() : dq_res.leading(),
                   "leading coefficient of U_2 D_q P_0 - c_{0,1} P_1 - c_{0,2} P_0"});
    return out;
}

std::vector<IdentityCertificate> instantiation_coherence(const std::vector<int>& k_samples) {
    const CoeffSuite symbolic = coeff_suite(true);
    std::vector<SuiteIdentity> identities = sq_identities();
    for (auto& id : dq_identities()) {
        identities.push_back(std::move(id));
    }
    std::vector<IdentityCertificate> out;
    for (const int k : k_samples) {
        const CoeffSuite concrete = coeff_suite(false, k);
        for (const auto& [name, residual] : identities) {
            out.push_back({name + "@k=" + std::to_string(k),
                           residual(symbolic).instantiate_n(k) - residual(concrete),
                           "symbolic residual at k minus residual from concrete coefficients"});
        }
    }
    return out;
}

}  // namespace qaw
