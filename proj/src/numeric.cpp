#include "qaw/numeric.hpp"

#include "qaw/awcore.hpp"
#include "qaw/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qaw {

void NumericConfig::validate() const {
    if (q_samples.empty() || x_samples.empty()) {
        throw ConfigError("numeric grid must contain at least one q and one x sample");
    }
    for (const double q : q_samples) {
        if (!(q > 0.0 && q < 1.0)) {
            throw ConfigError("q sample outside (0, 1)");
        }
    }
    for (const double x : x_samples) {
        if (!(std::abs(x) > 1.0)) {
            throw ConfigError("x sample with |x| <= 1; the lattice path needs |x| > 1");
        }
    }
    if (!(rel_tol > 0.0)) {
        throw ConfigError("rel_tol must be positive");
    }
}

double eval_poly(const XPoly& f, double q0, std::optional<int> n_ctx, double x0) {
    double acc = 0.0;
    const auto& coeffs = f.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x0 + it->eval(q0, n_ctx);
    }
    return acc;
}

double relative_deviation(double a, double b, double abs_floor) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale <= abs_floor) {
        return 0.0;
    }
    return std::abs(a - b) / scale;
}

NumericSummary numeric_crosscheck(const NumericConfig& cfg, int nmax) {
    cfg.validate();
    if (nmax < 0) {
        throw ConfigError("n-max must be nonnegative");
    }
    NumericSummary summary;
    summary.nmax = nmax;
    {
        std::ostringstream grid;
        grid << "q=";
        for (std::size_t i = 0; i < cfg.q_samples.size(); ++i) {
            grid << (i ? "," : "") << cfg.q_samples[i];
        }
        grid << ";x=";
        for (std::size_t i = 0; i < cfg.x_samples.size(); ++i) {
            grid << (i ? "," : "") << cfg.x_samples[i];
        }
        summary.grid = grid.str();
    }

    const OPSFamily fam = counterexample_family();
    const CoeffSuite sym = coeff_suite(true);
    const XPoly& u2_poly = u2();
    std::vector<XPoly> sq_exact;
    std::vector<XPoly> dq_exact;
    for (int n = 0; n <= nmax; ++n) {
        sq_exact.push_back(sq_apply(fam.poly(n)));
        dq_exact.push_back(u2_poly * dq_apply(fam.poly(n)));
    }

    for (const double q0 : cfg.q_samples) {
        for (int n = 0; n <= nmax; ++n) {
            const auto value = [&](int k, double x) {
                return k < 0 ? 0.0 : eval_poly(fam.poly(k), q0, std::nullopt, x);
            };
            const auto at = [&](const Scalar& s) { return s.eval(q0, n); };
            for (const double x0 : cfg.x_samples) {
                const LatticeValues lv =
                    lattice_apply([&](double x) { return value(n, x); }, q0, x0);
                const double u2_x = eval_poly(u2_poly, q0, std::nullopt, x0);

                const double sq_rhs = at(sym.alpha_n) * value(n, x0) + at(sym.c_n) * value(n - 1, x0);
                const double dq_lhs = u2_x * lv.dq;
                const double dq_rhs = at(sym.c_n1) * value(n + 1, x0) + at(sym.c_n2) * value(n, x0) +
                                      at(sym.c_n3) * value(n - 1, x0) + at(sym.c_n4) * value(n - 2, x0);
                summary.max_rel_dev =
                    std::max({summary.max_rel_dev, relative_deviation(lv.sq, sq_rhs, cfg.abs_floor),
                              relative_deviation(dq_lhs, dq_rhs, cfg.abs_floor)});

                const double sq_poly = eval_poly(sq_exact[static_cast<std::size_t>(n)], q0, std::nullopt, x0);
                const double dq_poly = eval_poly(dq_exact[static_cast<std::size_t>(n)], q0, std::nullopt, x0);
                summary.max_operator_dev = std::max(
                    {summary.max_operator_dev, relative_deviation(sq_poly, lv.sq, cfg.abs_floor),
                     relative_deviation(dq_poly, dq_lhs, cfg.abs_floor),
                     relative_deviation(sq_poly, sq_rhs, cfg.abs_floor),
                     relative_deviation(dq_poly, dq_rhs, cfg.abs_floor)});
            }
        }
    }
    summary.pass = summary.max_rel_dev < cfg.rel_tol && summary.max_operator_dev < cfg.rel_tol;
    return summary;
}

}  // namespace qaw
