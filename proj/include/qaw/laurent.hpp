#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qaw {

using Rational = mpq_class;

/// Exponent pair (i, j) of the monomial t^i u^j.
struct Exponent {
    std::int32_t t = 0;
    std::int32_t u = 0;

    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct Term {
    Exponent exp;
    Rational coeff;
};

/// Sparse Laurent polynomial in Q[t^{+-1}, u^{+-1}].
///
/// Terms are kept sorted by exponent pair in descending lexicographic order
/// (t first, then u) with no zero coefficients, so equality is structural.
class Laurent2 {
public:
    Laurent2() = default;
    Laurent2(long c);  // NOLINT(google-explicit-constructor)
    Laurent2(const Rational& c);  // NOLINT(google-explicit-constructor)

    static Laurent2 monomial(Rational c, std::int32_t ti, std::int32_t uj);
    /// Builds from arbitrary terms; duplicates are merged and zeros dropped.
    static Laurent2 from_terms(std::vector<Term> terms);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
    [[nodiscard]] bool mentions_u() const;
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    /// Lexicographically largest term. Requires a nonzero polynomial.
    [[nodiscard]] const Term& leading() const { return terms_.front(); }
    [[nodiscard]] Rational constant_coeff() const;

    [[nodiscard]] std::int32_t min_t() const;
    [[nodiscard]] std::int32_t max_t() const;
    [[nodiscard]] std::int32_t min_u() const;
    [[nodiscard]] std::int32_t max_u() const;

    Laurent2& operator+=(const Laurent2& o);
    Laurent2& operator-=(const Laurent2& o);
    Laurent2& operator*=(const Laurent2& o);
    Laurent2& operator*=(const Rational& c);

    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
    friend Laurent2 operator*(Laurent2 a, const Rational& c) { return a *= c; }
    friend Laurent2 operator-(Laurent2 a);
    friend bool operator==(const Laurent2& a, const Laurent2& b);

    /// Multiplies by c * t^ti * u^uj.
    [[nodiscard]] Laurent2 times_monomial(const Rational& c, std::int32_t ti,
                                          std::int32_t uj) const;
    /// u -> u * t^(2k).
    [[nodiscard]] Laurent2 shift_u(std::int32_t k) const;
    /// u -> t^(2n).
    [[nodiscard]] Laurent2 substitute_u(std::int32_t n) const;
    /// Evaluation with u := u_value and t := t_value.
    [[nodiscard]] double eval(double t_value, double u_value) const;
    [[nodiscard]] Rational eval_exact(const Rational& t_value,
                                      const Rational& u_value) const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string to_latex() const;

private:
    std::vector<Term> terms_;
};

/// Overflow-checked exponent arithmetic.
std::int32_t checked_exp(std::int64_t value);

/// gcd of two Laurent polynomials, up to a unit (monomial times rational).
/// The result is a genuine polynomial with no monomial factor and a monic
/// lexicographically leading term.
Laurent2 laurent_gcd(const Laurent2& a, const Laurent2& b);

/// Exact quotient a / b in the Laurent ring; throws std::domain_error if b
/// does not divide a.
Laurent2 laurent_divide_exact(const Laurent2& a, const Laurent2& b);
/// a / b if b divides a in the Laurent ring, otherwise nullopt.
std::optional<Laurent2> laurent_try_divide(const Laurent2& a, const Laurent2& b);

}  // namespace qaw
