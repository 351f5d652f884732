#pragma once

#include "qaw/scalar.hpp"

#include <string>
#include <vector>

namespace qaw {

/// A named identity reduced to a single residual that must vanish.
struct IdentityCertificate {
    std::string name;
    Scalar residual;
    /// Extra context, e.g. which index reading of a display was used.
    std::string note;

    [[nodiscard]] bool zero() const { return residual.is_zero(); }
    /// True when the residual is a Laurent polynomial (no denominator left).
    [[nodiscard]] bool denominator_free() const { return residual.is_polynomial(); }
    [[nodiscard]] std::string rendering() const { return zero() ? "0" : residual.to_string(); }
};

/// The four identities closing the S_q step, symbolic in k.
std::vector<IdentityCertificate> certify_sq_step();
/// d_{k,i} = c_{k+1,i} for i <= 4 and d_{k,5} = d_{k,6} = 0, symbolic in k.
std::vector<IdentityCertificate> certify_dq_step();
/// The n = 0 statements, computed with concrete polynomials.
std::vector<IdentityCertificate> certify_base_case();

/// For each symbolic step certificate and each k, the residual instantiated at
/// k minus the residual computed from the suite at concrete k.
std::vector<IdentityCertificate> instantiation_coherence(const std::vector<int>& k_samples);

}  // namespace qaw
