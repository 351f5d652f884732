#include "qaw/scalar.hpp"

#include <cmath>
#include <string>

namespace qaw {

Scalar::Scalar(Laurent2 num, Laurent2 den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Scalar::normalize() {
    if (den_.is_zero()) {
        throw DivisionByZero("scalar with zero denominator");
    }
    if (num_.is_zero()) {
        den_ = Laurent2(1);
        return;
    }
    if (den_.is_one()) {
        return;
    }
    if (den_.is_monomial()) {
        num_ = laurent_divide_exact(num_, den_);
        den_ = Laurent2(1);
        return;
    }
    if (auto quot = laurent_try_divide(num_, den_)) {
        num_ = std::move(*quot);
        den_ = Laurent2(1);
        return;
    }
    const Laurent2 g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = laurent_divide_exact(num_, g);
        den_ = laurent_divide_exact(den_, g);
    }
    fix_unit();
}

void Scalar::fix_unit() {
    if (num_.is_zero()) {
        den_ = Laurent2(1);
        return;
    }
    if (den_.is_one()) {
        return;
    }
    // Move the unit part (monomial times rational) of the denominator up.
    const Term& lead = den_.leading();
    const Laurent2 unit =
        Laurent2::monomial(lead.coeff, den_.min_t(), den_.min_u());
    num_ = laurent_divide_exact(num_, unit);
    den_ = laurent_divide_exact(den_, unit);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) {
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) {
            normalize();
        } else if (num_.is_zero()) {
            den_ = Laurent2(1);
        }
        return *this;
    }
    if (den_.is_one() || o.den_.is_one()) {
        // One side is a Laurent polynomial: the sum is already reduced.
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        fix_unit();
        return *this;
    }
    // Henrici: only the common part of the denominators can cancel.
    const Laurent2 g = laurent_gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        fix_unit();
        return *this;
    }
    const Laurent2 d1 = laurent_divide_exact(den_, g);
    const Laurent2 d2 = laurent_divide_exact(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    if (num_.is_zero()) {
        den_ = Laurent2(1);
        return *this;
    }
    const Laurent2 g2 = laurent_gcd(num_, g);
    if (!g2.is_one()) {
        num_ = laurent_divide_exact(num_, g2);
        den_ = d1 * laurent_divide_exact(o.den_, g2);
    } else {
        den_ = d1 * o.den_;
    }
    fix_unit();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    if (is_zero() || o.is_zero()) {
        *this = Scalar();
        return *this;
    }
    multiply_reduced(o.num_, o.den_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) {
        throw DivisionByZero("scalar division by zero");
    }
    if (is_zero()) {
        return *this;
    }
    multiply_reduced(o.den_, o.num_);
    return *this;
}

// *this *= n / d with n, d coprime: cross-cancel, then the product is reduced.
void Scalar::multiply_reduced(const Laurent2& n, const Laurent2& d) {
    const auto cancel = [](const Laurent2& a, const Laurent2& b) {
        if (a.is_monomial() || b.is_monomial() || b.is_one()) {
            return Laurent2(1);
        }
        return laurent_gcd(a, b);
    };
    const Laurent2 g1 = cancel(num_, d);
    const Laurent2 g2 = cancel(n, den_);
    Laurent2 a = g1.is_one() ? num_ : laurent_divide_exact(num_, g1);
    Laurent2 b = g2.is_one() ? den_ : laurent_divide_exact(den_, g2);
    const Laurent2 c = g2.is_one() ? n : laurent_divide_exact(n, g2);
    const Laurent2 e = g1.is_one() ? d : laurent_divide_exact(d, g1);
    num_ = a * c;
    den_ = b * e;
    fix_unit();
}

Scalar operator-(Scalar a) {
    a.num_ = -std::move(a.num_);
    return a;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::pow(int k) const {
    if (k < 0) {
        return inverse().pow(-k);
    }
    Scalar out(1);
    Scalar base = *this;
    while (k > 0) {
        if ((k & 1) != 0) {
            out *= base;
        }
        base *= base;
        k >>= 1;
    }
    return out;
}

Scalar Scalar::shift_n(std::int32_t k) const {
    return Scalar(num_.shift_u(k), den_.shift_u(k));
}

Scalar Scalar::instantiate_n(std::int32_t n) const {
    Laurent2 den = den_.substitute_u(n);
    if (den.is_zero()) {
        throw DivisionByZero("denominator vanishes at n = " + std::to_string(n));
    }
    return Scalar(num_.substitute_u(n), std::move(den));
}

double Scalar::eval(double q0, std::optional<int> n) const {
    if (mentions_u() && !n) {
        throw std::invalid_argument("scalar depends on u; an index n is required");
    }
    const double t_value = std::pow(q0, 0.25);
    const double u_value = n ? std::pow(q0, 0.5 * *n) : 1.0;
    const double den = den_.eval(t_value, u_value);
    if (den == 0.0) {
        throw DivisionByZero("denominator evaluates to zero");
    }
    return num_.eval(t_value, u_value) / den;
}

std::string Scalar::to_string() const {
    if (den_.is_one()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string Scalar::to_latex() const {
    if (den_.is_one()) {
        return num_.to_latex();
    }
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        default: throw std::invalid_argument(std::string("unknown scalar operation '") + op + "'");
    }
}

}  // namespace qaw
