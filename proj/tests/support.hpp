#pragma once

#include "qaw/zsym.hpp"

#include <cstdint>
#include <random>

namespace qaw::testing {

/// Seed for randomized tests; --seed=N on the test command line, default 0.
std::uint64_t seed();

class Generator {
public:
    explicit Generator(std::uint64_t salt) : rng_(seed() * 0x9E3779B97F4A7C15ULL + salt) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Up to max_terms terms, exponents in [-deg, deg], coefficients in [-9, 9].
    Laurent2 laurent(int deg = 4, int max_terms = 4, bool with_u = true) {
        std::vector<Term> terms;
        const int count = integer(1, max_terms);
        for (int i = 0; i < count; ++i) {
            terms.push_back(Term{{integer(-deg, deg), with_u ? integer(-deg, deg) : 0},
                                 Rational(integer(-9, 9))});
        }
        return Laurent2::from_terms(std::move(terms));
    }

    Laurent2 nonzero_laurent(int deg = 4, int max_terms = 4, bool with_u = true) {
        for (;;) {
            Laurent2 p = laurent(deg, max_terms, with_u);
            if (!p.is_zero()) {
                return p;
            }
        }
    }

    Scalar scalar(bool with_u = true) {
        if (integer(0, 2) == 0) {
            return Scalar(laurent(4, 4, with_u));
        }
        return Scalar(laurent(4, 3, with_u), nonzero_laurent(3, 3, with_u));
    }

    Scalar nonzero_scalar(bool with_u = true) {
        for (;;) {
            Scalar s = scalar(with_u);
            if (!s.is_zero()) {
                return s;
            }
        }
    }

    /// Polynomial in x of degree <= max_degree with u-free coefficients.
    XPoly xpoly(int max_degree, int coeff_deg = 3) {
        std::vector<Scalar> coeffs;
        const int d = integer(0, max_degree);
        for (int k = 0; k <= d; ++k) {
            coeffs.emplace_back(laurent(coeff_deg, 3, false));
        }
        return XPoly(std::move(coeffs));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Exact value of a u-free scalar at a rational t.
Rational eval_at(const Scalar& s, const Rational& t_value);
/// Exact value of f at x = x0 with t = t_value.
Rational eval_at(const XPoly& f, const Rational& t_value, const Rational& x0);

/// D_q f and S_q f at x(z0) = (z0 + 1/z0)/2 from the lattice definition,
/// evaluated in exact rationals at the points z0 t^2 and z0 t^-2.
struct ExactLattice {
    Rational dq;
    Rational sq;
    Rational x;
};
ExactLattice lattice_oracle(const XPoly& f, const Rational& t_value, const Rational& z0);

}  // namespace qaw::testing
