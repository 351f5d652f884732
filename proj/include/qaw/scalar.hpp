#pragma once

#include "qaw/laurent.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qaw {

/// Raised for division by an exact zero anywhere in the scalar field.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact element of Q(t, u), where t stands for q^(1/4) and u for q^(n/2).
///
/// Always stored reduced: numerator and denominator are coprime, and the
/// denominator is a polynomial without monomial factor whose lexicographically
/// leading coefficient is 1. Two scalars are equal iff their stored forms are.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(Laurent2 p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(Laurent2 num, Laurent2 den);

    static Scalar t() { return Laurent2::monomial(1, 1, 0); }
    static Scalar u() { return Laurent2::monomial(1, 0, 1); }
    /// c * t^ti * u^uj
    static Scalar monomial(Rational c, std::int32_t ti, std::int32_t uj = 0) {
        return Laurent2::monomial(std::move(c), ti, uj);
    }
    /// Parses the textual grammar produced by to_string().
    static Scalar parse(std::string_view text);

    [[nodiscard]] const Laurent2& numerator() const { return num_; }
    [[nodiscard]] const Laurent2& denominator() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }
    [[nodiscard]] bool mentions_u() const { return num_.mentions_u() || den_.mentions_u(); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(Scalar a);
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(int k) const;

    /// Index shift n -> n + k, realized as u -> u * t^(2k).
    [[nodiscard]] Scalar shift_n(std::int32_t k) const;
    /// Substitutes u := t^(2n); throws DivisionByZero naming n if the
    /// denominator vanishes.
    [[nodiscard]] Scalar instantiate_n(std::int32_t n) const;
    /// Float value at t = q0^(1/4), u = q0^(n/2).
    [[nodiscard]] double eval(double q0, std::optional<int> n = std::nullopt) const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string to_latex() const;

private:
    void normalize();
    // Moves the monomial-times-rational unit of the denominator upward.
    void fix_unit();
    void multiply_reduced(const Laurent2& n, const Laurent2& d);

    Laurent2 num_;
    Laurent2 den_;
};

Scalar scalar_arith(const Scalar& a, const Scalar& b, char op);

}  // namespace qaw
