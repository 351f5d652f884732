#include "qaw/zsym.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qaw {

namespace {

const Scalar& half() {
    static const Scalar value(Rational(1, 2));
    return value;
}

// Chebyshev polynomials T_k with integer coefficients, T_k[j] the x^j term.
const std::vector<Rational>& chebyshev(int k) {
    static std::mutex mutex;
    static std::deque<std::vector<Rational>> table{{1}, {0, 1}};
    const std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= k) {
        const auto& a = table[table.size() - 1];
        const auto& b = table[table.size() - 2];
        std::vector<Rational> next(a.size() + 1);
        for (std::size_t j = 0; j < a.size(); ++j) {
            next[j + 1] += 2 * a[j];
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            next[j] -= b[j];
        }
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(k)];
}

// Splits a Scalar into (negative?, magnitude) when it is a single polynomial
// term, so that "x - t" renders instead of "x + (-t)".
bool single_term(const Scalar& c) {
    return c.is_polynomial() && c.numerator().is_monomial();
}

std::string x_power(int k, bool latex) {
    if (k == 0) {
        return "";
    }
    if (k == 1) {
        return "x";
    }
    return latex ? "x^{" + std::to_string(k) + "}" : "x^" + std::to_string(k);
}

std::string render_x(const std::vector<Scalar>& coeffs, bool latex) {
    if (coeffs.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const Scalar& c = coeffs[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        bool negative = false;
        std::string body;
        if (single_term(c)) {
            negative = sgn(c.numerator().leading().coeff) < 0;
            const Scalar mag = negative ? -c : c;
            body = latex ? mag.to_latex() : mag.to_string();
        } else {
            body = latex ? "\\left(" + c.to_latex() + "\\right)" : "(" + c.to_string() + ")";
        }
        const std::string mono = x_power(k, latex);
        if (!mono.empty()) {
            if (body == "1") {
                body = mono;
            } else {
                body += (latex ? " " : "*") + mono;
            }
        }
        if (first) {
            os << (negative ? "-" : "") << body;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// XPoly

XPoly::XPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly::XPoly(const Scalar& c) {
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

XPoly XPoly::monomial(const Scalar& c, int k) {
    if (k < 0) {
        throw std::invalid_argument("negative power of x");
    }
    std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs.back() = c;
    return XPoly(std::move(coeffs));
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Scalar XPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

XPoly& XPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& coeff : coeffs_) {
        coeff *= c;
    }
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return XPoly(std::move(out));
}

XPoly XPoly::times_x() const {
    if (is_zero()) {
        return {};
    }
    std::vector<Scalar> out;
    out.reserve(coeffs_.size() + 1);
    out.emplace_back();
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return XPoly(std::move(out));
}

XPoly XPoly::instantiate_n(std::int32_t n) const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.instantiate_n(n));
    }
    return XPoly(std::move(out));
}

bool XPoly::mentions_u() const {
    return std::any_of(coeffs_.begin(), coeffs_.end(),
                       [](const Scalar& c) { return c.mentions_u(); });
}

std::string XPoly::to_string() const { return render_x(coeffs_, false); }
std::string XPoly::to_latex() const { return render_x(coeffs_, true); }

// ---------------------------------------------------------------------------
// ZLaurent

ZLaurent::ZLaurent(int low, std::vector<Scalar> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    trim();
}

ZLaurent ZLaurent::monomial(const Scalar& c, int k) { return ZLaurent(k, {c}); }

void ZLaurent::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    std::size_t lead_zeros = 0;
    while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros].is_zero()) {
        ++lead_zeros;
    }
    if (lead_zeros > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
        low_ += static_cast<int>(lead_zeros);
    }
    if (coeffs_.empty()) {
        low_ = 0;
    }
}

Scalar ZLaurent::coeff(int k) const {
    if (coeffs_.empty() || k < low_ || k > high()) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(k - low_)];
}

bool ZLaurent::is_symmetric() const {
    if (coeffs_.empty()) {
        return true;
    }
    if (low_ != -high()) {
        return false;
    }
    for (std::size_t i = 0, j = coeffs_.size() - 1; i < j; ++i, --j) {
        if (!(coeffs_[i] == coeffs_[j])) {
            return false;
        }
    }
    return true;
}

namespace {

ZLaurent combine(const ZLaurent& a, const ZLaurent& b, bool subtract) {
    if (b.is_zero()) {
        return a;
    }
    const int low = a.is_zero() ? b.low() : std::min(a.low(), b.low());
    const int high = a.is_zero() ? b.high() : std::max(a.high(), b.high());
    std::vector<Scalar> out(static_cast<std::size_t>(high - low + 1));
    for (int k = a.low(); !a.is_zero() && k <= a.high(); ++k) {
        out[static_cast<std::size_t>(k - low)] = a.coeffs()[static_cast<std::size_t>(k - a.low())];
    }
    for (int k = b.low(); k <= b.high(); ++k) {
        const Scalar& c = b.coeffs()[static_cast<std::size_t>(k - b.low())];
        auto& slot = out[static_cast<std::size_t>(k - low)];
        if (subtract) {
            slot -= c;
        } else {
            slot += c;
        }
    }
    return ZLaurent(low, std::move(out));
}

}  // namespace

ZLaurent& ZLaurent::operator+=(const ZLaurent& o) { return *this = combine(*this, o, false); }
ZLaurent& ZLaurent::operator-=(const ZLaurent& o) { return *this = combine(*this, o, true); }

ZLaurent& ZLaurent::operator*=(const Scalar& c) {
    for (auto& coeff : coeffs_) {
        coeff *= c;
    }
    trim();
    return *this;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return ZLaurent(a.low_ + b.low_, std::move(out));
}

std::string ZLaurent::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = high(); k >= low_; --k) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(k - low_)];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.to_string() << ")";
        if (k != 0) {
            os << "*z^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// SymPoly

SymPoly::SymPoly(ZLaurent g) : g_(std::move(g)) {
    if (!g_.is_symmetric()) {
        throw std::logic_error("Laurent polynomial in z is not symmetric under z -> 1/z");
    }
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) { return SymPoly(a.g_ + b.g_); }
SymPoly operator-(const SymPoly& a, const SymPoly& b) { return SymPoly(a.g_ - b.g_); }
SymPoly operator*(const SymPoly& a, const SymPoly& b) { return SymPoly(a.g_ * b.g_); }

SymPoly sym_arith(const SymPoly& a, const SymPoly& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: throw std::invalid_argument(std::string("unknown operation '") + op + "'");
    }
}

// ---------------------------------------------------------------------------
// Conversions

SymPoly x_to_z(const XPoly& f) {
    if (f.is_zero()) {
        return {};
    }
    // Horner in X = (z + 1/z)/2, kept dense on [-d, d].
    const int d = f.degree();
    std::vector<Scalar> acc(static_cast<std::size_t>(2 * d + 1));
    const auto at = [d](int k) { return static_cast<std::size_t>(k + d); };
    acc[at(0)] = f.coeffs().back();
    for (int k = d - 1, width = 0; k >= 0; --k, ++width) {
        std::vector<Scalar> next(acc.size());
        for (int m = -width; m <= width; ++m) {
            const Scalar& c = acc[at(m)];
            if (c.is_zero()) {
                continue;
            }
            const Scalar h = c * half();
            next[at(m + 1)] += h;
            next[at(m - 1)] += h;
        }
        next[at(0)] += f.coeffs()[static_cast<std::size_t>(k)];
        acc = std::move(next);
    }
    return SymPoly(ZLaurent(-d, std::move(acc)));
}

XPoly z_to_x(const SymPoly& g) {
    if (g.is_zero()) {
        return {};
    }
    // z^k + z^-k = 2 T_k(x).
    const int d = g.degree();
    std::vector<Scalar> out(static_cast<std::size_t>(d) + 1);
    out[0] = g.coeff(0);
    for (int k = 1; k <= d; ++k) {
        const Scalar c = g.coeff(k);
        if (c.is_zero()) {
            continue;
        }
        const auto& tk = chebyshev(k);
        for (std::size_t j = 0; j < tk.size(); ++j) {
            if (sgn(tk[j]) != 0) {
                out[j] += c * Scalar(Rational(2 * tk[j]));
            }
        }
    }
    return XPoly(std::move(out));
}

ZLaurent z_scale(const ZLaurent& g, int k) {
    std::vector<Scalar> out;
    out.reserve(g.coeffs().size());
    for (int m = g.low(); !g.is_zero() && m <= g.high(); ++m) {
        out.push_back(g.coeffs()[static_cast<std::size_t>(m - g.low())] *
                      Scalar::monomial(1, checked_exp(2 * std::int64_t{k} * m)));
    }
    return ZLaurent(g.low(), std::move(out));
}

ZLaurent z_scale(const SymPoly& g, int k) { return z_scale(g.laurent(), k); }

ZLaurent divide_exact(const ZLaurent& num, const ZLaurent& den) {
    if (den.is_zero()) {
        throw DivisionByZero("division by the zero Laurent polynomial in z");
    }
    if (num.is_zero()) {
        return {};
    }
    const int q_low = num.low() - den.low();
    const int q_high = num.high() - den.high();
    if (q_high < q_low) {
        throw std::domain_error("inexact division in z: nonzero remainder");
    }
    std::vector<Scalar> rem = num.coeffs();
    std::vector<Scalar> quot(static_cast<std::size_t>(q_high - q_low + 1));
    const Scalar& lead = den.coeffs().back();
    const auto& dc = den.coeffs();
    for (int m = q_high; m >= q_low; --m) {
        // z^(m + den.high) sits at index m + den.high - num.low.
        const auto top = static_cast<std::size_t>(m + den.high() - num.low());
        if (rem[top].is_zero()) {
            continue;
        }
        Scalar qm = rem[top] / lead;
        const auto base = static_cast<std::size_t>(m + den.low() - num.low());
        for (std::size_t j = 0; j < dc.size(); ++j) {
            if (!dc[j].is_zero()) {
                rem[base + j] -= qm * dc[j];
            }
        }
        quot[static_cast<std::size_t>(m - q_low)] = std::move(qm);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Scalar& c) { return !c.is_zero(); })) {
        throw std::domain_error("inexact division in z: nonzero remainder");
    }
    return ZLaurent(q_low, std::move(quot));
}

}  // namespace qaw
