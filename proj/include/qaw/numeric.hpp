#pragma once

#include "qaw/zsym.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaw {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct NumericConfig {
    std::vector<double> q_samples{0.3, 0.7};
    std::vector<double> x_samples{1.1, 1.5, 2.0, 3.0};
    double rel_tol = 1e-9;
    double abs_floor = 1e-12;

    /// Throws ConfigError for q outside (0, 1), |x| <= 1 or rel_tol <= 0.
    void validate() const;
};

/// Horner evaluation over Scalar::eval of each coefficient.
double eval_poly(const XPoly& f, double q0, std::optional<int> n_ctx, double x0);

/// D_q f and S_q f at x0 by direct evaluation on the lattice points
/// x(s +- 1/2), with z = x0 + sqrt(x0^2 - 1).
struct LatticeValues {
    double dq;
    double sq;
};
template <typename F>
LatticeValues lattice_apply(F&& f, double q0, double x0);

/// |a - b| / max(|a|, |b|), or 0 when both are within abs_floor of zero.
double relative_deviation(double a, double b, double abs_floor);

struct NumericSummary {
    int nmax = 0;
    std::string grid;
    double max_rel_dev = 0.0;
    /// Exact operator output evaluated vs. lattice evaluation of the input.
    double max_operator_dev = 0.0;
    bool pass = false;
};

NumericSummary numeric_crosscheck(const NumericConfig& cfg, int nmax);

// ---------------------------------------------------------------------------

template <typename F>
LatticeValues lattice_apply(F&& f, double q0, double x0) {
    if (!(x0 > 1.0 || x0 < -1.0)) {
        throw ConfigError("lattice evaluation needs |x| > 1 so that z is real");
    }
    const double z = x0 > 0 ? x0 + std::sqrt(x0 * x0 - 1.0) : x0 - std::sqrt(x0 * x0 - 1.0);
    const double root_q = std::sqrt(q0);
    const double zp = z * root_q;
    const double zm = z / root_q;
    const double xp = 0.5 * (zp + 1.0 / zp);
    const double xm = 0.5 * (zm + 1.0 / zm);
    const double fp = f(xp);
    const double fm = f(xm);
    return LatticeValues{(fp - fm) / (xp - xm), 0.5 * (fp + fm)};
}

}  // namespace qaw
