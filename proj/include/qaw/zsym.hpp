#pragma once

#include "qaw/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qaw {

/// Distinguished degree of the zero polynomial.
inline constexpr int kZeroDegree = -1'000'000;

/// Polynomial in x with Scalar coefficients; coeffs[k] multiplies x^k.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Scalar> coeffs);
    XPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
    XPoly(long c) : XPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

    static XPoly x() { return XPoly(std::vector<Scalar>{0, 1}); }
    static XPoly monomial(const Scalar& c, int k);
    /// Parses "c_k*x^k + ..." style text (any expression over t, u, x).
    static XPoly parse(std::string_view text);

    [[nodiscard]] int degree() const {
        return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
    [[nodiscard]] Scalar coeff(int k) const;
    [[nodiscard]] const Scalar& leading() const { return coeffs_.back(); }

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const Scalar& c);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const Scalar& c) { return a *= c; }
    friend XPoly operator*(const Scalar& c, XPoly a) { return a *= c; }
    friend XPoly operator-(XPoly a) { return a *= Scalar(-1); }
    friend bool operator==(const XPoly&, const XPoly&) = default;

    /// Multiplies by x.
    [[nodiscard]] XPoly times_x() const;
    [[nodiscard]] XPoly instantiate_n(std::int32_t n) const;
    [[nodiscard]] bool mentions_u() const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string to_latex() const;

private:
    void trim();

    std::vector<Scalar> coeffs_;
};

/// Laurent polynomial in z with Scalar coefficients, no symmetry assumed.
class ZLaurent {
public:
    ZLaurent() = default;
    /// coeffs[k] multiplies z^(low + k).
    ZLaurent(int low, std::vector<Scalar> coeffs);

    static ZLaurent monomial(const Scalar& c, int k);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] int low() const { return low_; }
    [[nodiscard]] int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Scalar coeff(int k) const;
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_symmetric() const;

    ZLaurent& operator+=(const ZLaurent& o);
    ZLaurent& operator-=(const ZLaurent& o);
    ZLaurent& operator*=(const Scalar& c);
    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
    friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator*(ZLaurent a, const Scalar& c) { return a *= c; }
    friend bool operator==(const ZLaurent&, const ZLaurent&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void trim();

    int low_ = 0;
    std::vector<Scalar> coeffs_;
};

/// Symmetric Laurent polynomial in z: the image of a polynomial in x under
/// x = (z + 1/z) / 2.
class SymPoly {
public:
    SymPoly() = default;
    /// Throws std::logic_error if g is not invariant under z -> 1/z.
    explicit SymPoly(ZLaurent g);

    [[nodiscard]] const ZLaurent& laurent() const { return g_; }
    [[nodiscard]] bool is_zero() const { return g_.is_zero(); }
    [[nodiscard]] int degree() const { return g_.is_zero() ? kZeroDegree : g_.high(); }
    [[nodiscard]] Scalar coeff(int k) const { return g_.coeff(k); }

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    [[nodiscard]] std::string to_string() const { return g_.to_string(); }

private:
    ZLaurent g_;
};

SymPoly x_to_z(const XPoly& f);
XPoly z_to_x(const SymPoly& g);
/// z^m -> t^(2km) z^m, i.e. the lattice shift s -> s + k/2.
ZLaurent z_scale(const SymPoly& g, int k);
ZLaurent z_scale(const ZLaurent& g, int k);
/// Exact quotient; throws std::domain_error on a nonzero remainder.
ZLaurent divide_exact(const ZLaurent& num, const ZLaurent& den);

SymPoly sym_arith(const SymPoly& a, const SymPoly& b, char op);

}  // namespace qaw
