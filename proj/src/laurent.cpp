#include "qaw/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qaw {

std::int32_t checked_exp(std::int64_t value) {
    if (value > std::numeric_limits<std::int32_t>::max() ||
        value < std::numeric_limits<std::int32_t>::min()) {
        throw std::overflow_error("exponent overflow in Laurent polynomial");
    }
    return static_cast<std::int32_t>(value);
}

namespace {

bool desc(const Term& a, const Term& b) { return a.exp > b.exp; }

// Sorts descending, merges equal exponents and drops zeros in place.
void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), desc);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = std::move(terms[i].coeff);
        while (j < terms.size() && terms[j].exp == terms[i].exp) {
            sum += terms[j].coeff;
            ++j;
        }
        if (sgn(sum) != 0) {
            terms[out].exp = terms[i].exp;
            terms[out].coeff = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp > b[j].exp)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exp > a[i].exp) {
            out.push_back(Term{b[j].exp, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff)
                                  : Rational(a[i].coeff + b[j].coeff);
            if (sgn(c) != 0) {
                out.push_back(Term{a[i].exp, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q (in t), used only for gcd and exact
// division. Index k is the coefficient of t^k; no trailing zeros.

using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

bool uis_one(const UPoly& p) { return p.size() == 1 && p[0] == 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    UPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

void usub_inplace(UPoly& a, const UPoly& b) {
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
}

// Returns the quotient; a is overwritten with the remainder.
UPoly udivmod(UPoly& a, const UPoly& b) {
    if (b.empty()) {
        throw std::domain_error("univariate division by zero");
    }
    if (a.size() < b.size()) {
        return {};
    }
    UPoly quot(a.size() - b.size() + 1);
    const Rational inv_lead = 1 / b.back();
    for (int k = udeg(a) - udeg(b); k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(k) + b.size() - 1;
        if (sgn(a[top]) == 0) {
            continue;
        }
        Rational qk = a[top] * inv_lead;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[static_cast<std::size_t>(k) + j] -= qk * b[j];
        }
        quot[static_cast<std::size_t>(k)] = std::move(qk);
    }
    trim(a);
    trim(quot);
    return quot;
}

UPoly uexact_div(UPoly a, const UPoly& b) {
    UPoly q = udivmod(a, b);
    if (!a.empty()) {
        throw std::domain_error("inexact univariate division");
    }
    return q;
}

void umake_monic(UPoly& p) {
    if (p.empty() || p.back() == 1) {
        return;
    }
    const Rational inv = 1 / p.back();
    for (auto& c : p) {
        c *= inv;
    }
}

UPoly ugcd(UPoly a, UPoly b) {
    if (a.empty()) {
        umake_monic(b);
        return b;
    }
    umake_monic(a);
    while (!b.empty()) {
        umake_monic(b);
        udivmod(a, b);
        std::swap(a, b);
    }
    umake_monic(a);
    return a;
}

// ---------------------------------------------------------------------------
// Q[t][u]: index j holds the coefficient of u^j as a UPoly in t.

using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && p.back().empty()) {
        p.pop_back();
    }
}

int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        g = ugcd(std::move(g), c);
        if (uis_one(g)) {
            break;
        }
    }
    return g;
}

BPoly bdiv_by_upoly(const BPoly& p, const UPoly& c) {
    BPoly out;
    out.reserve(p.size());
    for (const auto& coeff : p) {
        out.push_back(coeff.empty() ? UPoly{} : uexact_div(coeff, c));
    }
    return out;
}

BPoly bprimitive(const BPoly& p) {
    if (p.empty()) {
        return p;
    }
    BPoly out = bdiv_by_upoly(p, bcontent(p));
    // Fix the rational unit so the leading t-coefficient is 1.
    const Rational inv = 1 / out.back().back();
    for (auto& c : out) {
        for (auto& r : c) {
            r *= inv;
        }
    }
    return out;
}

// Pseudo-remainder of a by b (deg_u a >= deg_u b).
BPoly bprem(BPoly a, const BPoly& b) {
    const UPoly& lc = b.back();
    while (!a.empty() && bdeg(a) >= bdeg(b)) {
        const int shift = bdeg(a) - bdeg(b);
        const UPoly top = a.back();
        for (auto& c : a) {
            c = umul(c, lc);
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            usub_inplace(a[static_cast<std::size_t>(shift) + j], umul(top, b[j]));
        }
        btrim(a);
    }
    return a;
}

BPoly btranspose(const BPoly& p) {
    std::size_t width = 0;
    for (const auto& c : p) {
        width = std::max(width, c.size());
    }
    BPoly out(width);
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (std::size_t i = 0; i < p[j].size(); ++i) {
            if (sgn(p[j][i]) != 0) {
                if (out[i].size() <= j) {
                    out[i].resize(j + 1);
                }
                out[i][j] = p[j][i];
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degree bounds for the gcd from images in F_p[u].

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
        if ((e & 1) != 0) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

std::optional<std::uint64_t> mod_image(const Rational& r, std::uint64_t p) {
    const std::uint64_t den = mpz_fdiv_ui(r.get_den_mpz_t(), p);
    if (den == 0) {
        return std::nullopt;
    }
    return mpz_fdiv_ui(r.get_num_mpz_t(), p) * mod_inv(den, p) % p;
}

void mtrim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Image of p(t0, u) in F_p[u]; nullopt if a denominator vanishes mod p.
std::optional<ModPoly> mod_specialize(const BPoly& b, std::uint64_t t0, std::uint64_t p) {
    ModPoly out(b.size(), 0);
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t acc = 0;
        for (auto it = b[j].rbegin(); it != b[j].rend(); ++it) {
            const auto c = mod_image(*it, p);
            if (!c) {
                return std::nullopt;
            }
            acc = (acc * t0 + *c) % p;
        }
        out[j] = acc;
    }
    return out;
}

int mod_gcd_degree(ModPoly a, ModPoly b, std::uint64_t p) {
    mtrim(a);
    mtrim(b);
    while (!b.empty()) {
        const std::uint64_t inv = mod_inv(b.back(), p);
        while (a.size() >= b.size()) {
            const std::uint64_t f = a.back() * inv % p;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[shift + j] = (a[shift + j] + (p - f) * b[j]) % p;
            }
            mtrim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Upper bound on deg_u gcd(a, b). The image at t = t0 mod p keeps the degree
// of every factor whenever the leading coefficients survive, so its gcd
// degree bounds the true one. Falls back to the trivial bound.
int gcd_degree_bound(const BPoly& a, const BPoly& b) {
    constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};
    int bound = std::min(bdeg(a), bdeg(b));
    std::uint64_t t0 = 1234567;
    for (const std::uint64_t p : kPrimes) {
        for (int attempt = 0; attempt < 3 && bound > 0; ++attempt, t0 += 7919) {
            const auto ia = mod_specialize(a, t0, p);
            const auto ib = mod_specialize(b, t0, p);
            if (!ia || !ib) {
                break;  // denominator divisible by p; next prime
            }
            if (ia->back() == 0 || ib->back() == 0) {
                continue;
            }
            bound = std::min(bound, mod_gcd_degree(*ia, *ib, p));
        }
        if (bound == 0) {
            break;
        }
    }
    return bound;
}

BPoly bgcd_prs(BPoly a, BPoly b);

BPoly bgcd(BPoly a, BPoly b) {
    if (a.empty()) {
        return b;
    }
    if (b.empty()) {
        return a;
    }
    // A zero degree bound in one variable reduces the gcd to contents.
    if (gcd_degree_bound(a, b) == 0) {
        return BPoly{ugcd(bcontent(a), bcontent(b))};
    }
    const BPoly at = btranspose(a);
    const BPoly bt = btranspose(b);
    if (gcd_degree_bound(at, bt) == 0) {
        return btranspose(BPoly{ugcd(bcontent(at), bcontent(bt))});
    }
    return bgcd_prs(std::move(a), std::move(b));
}

BPoly bgcd_prs(BPoly a, BPoly b) {
    const UPoly content = ugcd(bcontent(a), bcontent(b));
    a = bprimitive(a);
    b = bprimitive(b);
    if (bdeg(a) < bdeg(b)) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        BPoly r = bprem(a, b);
        a = std::move(b);
        b = bprimitive(r);
    }
    for (auto& c : a) {
        c = umul(c, content);
    }
    return a;
}

// Exact quotient, or nullopt when b does not divide a.
std::optional<BPoly> btry_div(BPoly a, const BPoly& b) {
    if (b.empty()) {
        throw std::domain_error("bivariate division by zero");
    }
    if (a.empty()) {
        return BPoly{};
    }
    if (bdeg(a) < bdeg(b)) {
        return std::nullopt;
    }
    BPoly quot(static_cast<std::size_t>(bdeg(a) - bdeg(b) + 1));
    for (int k = bdeg(a) - bdeg(b); k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(k) + b.size() - 1;
        if (top >= a.size() || a[top].empty()) {
            continue;
        }
        UPoly rem = a[top];
        UPoly qk = udivmod(rem, b.back());
        if (!rem.empty()) {
            return std::nullopt;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            usub_inplace(a[static_cast<std::size_t>(k) + j], umul(qk, b[j]));
        }
        quot[static_cast<std::size_t>(k)] = std::move(qk);
    }
    btrim(a);
    if (!a.empty()) {
        return std::nullopt;
    }
    btrim(quot);
    return quot;
}

BPoly bexact_div(const BPoly& a, const BPoly& b) {
    auto q = btry_div(a, b);
    if (!q) {
        throw std::domain_error("inexact bivariate division");
    }
    return std::move(*q);
}

// Splits p = t^mt u^mu * P with P a polynomial having no monomial factor.
struct Stripped {
    std::int32_t mt = 0;
    std::int32_t mu = 0;
    BPoly poly;
};

Stripped strip(const Laurent2& p) {
    Stripped s;
    if (p.is_zero()) {
        return s;
    }
    s.mt = p.min_t();
    s.mu = p.min_u();
    s.poly.resize(static_cast<std::size_t>(p.max_u() - s.mu + 1));
    for (const auto& term : p.terms()) {
        auto& coeff = s.poly[static_cast<std::size_t>(term.exp.u - s.mu)];
        const auto idx = static_cast<std::size_t>(term.exp.t - s.mt);
        if (coeff.size() <= idx) {
            coeff.resize(idx + 1);
        }
        coeff[idx] = term.coeff;
    }
    return s;
}

Laurent2 unstrip(const BPoly& p, std::int32_t mt, std::int32_t mu) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (std::size_t i = 0; i < p[j].size(); ++i) {
            if (sgn(p[j][i]) != 0) {
                terms.push_back(Term{{checked_exp(std::int64_t{mt} + static_cast<std::int64_t>(i)),
                                      checked_exp(std::int64_t{mu} + static_cast<std::int64_t>(j))},
                                     p[j][i]});
            }
        }
    }
    return Laurent2::from_terms(std::move(terms));
}

void append_monomial(std::ostringstream& os, const Exponent& e, bool latex,
                     bool need_sep) {
    auto var = [&](char name, std::int32_t power) {
        if (power == 0) {
            return;
        }
        if (need_sep) {
            os << (latex ? " " : "*");
        }
        need_sep = true;
        os << name;
        if (power != 1) {
            if (latex) {
                os << "^{" << power << "}";
            } else {
                os << "^" << power;
            }
        }
    };
    var('t', e.t);
    var('u', e.u);
}

std::string render(const std::vector<Term>& terms, bool latex) {
    if (terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms) {
        const bool negative = sgn(term.coeff) < 0;
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(term.coeff);
        const bool bare = term.exp == Exponent{};
        const bool integral = mag.get_den() == 1;
        bool wrote = false;
        if (bare || mag != 1) {
            if (latex) {
                if (integral) {
                    os << mag.get_num().get_str();
                } else {
                    os << "\\frac{" << mag.get_num().get_str() << "}{"
                       << mag.get_den().get_str() << "}";
                }
            } else if (integral) {
                os << mag.get_num().get_str();
            } else {
                os << "(" << mag.get_str() << ")";
            }
            wrote = true;
        }
        append_monomial(os, term.exp, latex, wrote);
    }
    return os.str();
}

}  // namespace

Laurent2::Laurent2(long c) {
    if (c != 0) {
        terms_.push_back(Term{{}, Rational(c)});
    }
}

Laurent2::Laurent2(const Rational& c) {
    if (sgn(c) != 0) {
        terms_.push_back(Term{{}, c});
    }
}

Laurent2 Laurent2::monomial(Rational c, std::int32_t ti, std::int32_t uj) {
    Laurent2 out;
    if (sgn(c) != 0) {
        out.terms_.push_back(Term{{ti, uj}, std::move(c)});
    }
    return out;
}

Laurent2 Laurent2::from_terms(std::vector<Term> terms) {
    canonicalize(terms);
    Laurent2 out;
    out.terms_ = std::move(terms);
    return out;
}

bool Laurent2::is_one() const {
    return terms_.size() == 1 && terms_[0].exp == Exponent{} && terms_[0].coeff == 1;
}

bool Laurent2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

bool Laurent2::mentions_u() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& term) { return term.exp.u != 0; });
}

Rational Laurent2::constant_coeff() const {
    for (const auto& term : terms_) {
        if (term.exp == Exponent{}) {
            return term.coeff;
        }
    }
    return 0;
}

std::int32_t Laurent2::min_t() const { return terms_.back().exp.t; }
std::int32_t Laurent2::max_t() const { return terms_.front().exp.t; }

std::int32_t Laurent2::min_u() const {
    std::int32_t m = std::numeric_limits<std::int32_t>::max();
    for (const auto& term : terms_) {
        m = std::min(m, term.exp.u);
    }
    return m;
}

std::int32_t Laurent2::max_u() const {
    std::int32_t m = std::numeric_limits<std::int32_t>::min();
    for (const auto& term : terms_) {
        m = std::max(m, term.exp.u);
    }
    return m;
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
    if (o.is_zero()) {
        return *this;
    }
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

Laurent2& Laurent2::operator*=(const Laurent2& o) { return *this = *this * o; }

Laurent2& Laurent2::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.coeff *= c;
    }
    return *this;
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.size() == 1) {
        return b.times_monomial(a.terms_[0].coeff, a.terms_[0].exp.t, a.terms_[0].exp.u);
    }
    if (b.size() == 1) {
        return a.times_monomial(b.terms_[0].coeff, b.terms_[0].exp.t, b.terms_[0].exp.u);
    }
    const Laurent2& small = a.size() <= b.size() ? a : b;
    const Laurent2& large = a.size() <= b.size() ? b : a;
    // Each row is sorted, so accumulate row by row with linear merges.
    Laurent2 acc;
    for (const auto& s : small.terms_) {
        acc += large.times_monomial(s.coeff, s.exp.t, s.exp.u);
    }
    return acc;
}

Laurent2 operator-(Laurent2 a) {
    for (auto& term : a.terms_) {
        term.coeff = -term.coeff;
    }
    return a;
}

bool operator==(const Laurent2& a, const Laurent2& b) {
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

Laurent2 Laurent2::times_monomial(const Rational& c, std::int32_t ti,
                                  std::int32_t uj) const {
    Laurent2 out;
    if (sgn(c) == 0) {
        return out;
    }
    out.terms_.reserve(terms_.size());
    for (const auto& term : terms_) {
        out.terms_.push_back(Term{{checked_exp(std::int64_t{term.exp.t} + ti),
                                   checked_exp(std::int64_t{term.exp.u} + uj)},
                                  term.coeff * c});
    }
    return out;
}

Laurent2 Laurent2::shift_u(std::int32_t k) const {
    if (k == 0) {
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) {
        out.push_back(Term{{checked_exp(std::int64_t{term.exp.t} +
                                        2 * std::int64_t{k} * term.exp.u),
                            term.exp.u},
                           term.coeff});
    }
    return from_terms(std::move(out));
}

Laurent2 Laurent2::substitute_u(std::int32_t n) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) {
        out.push_back(Term{{checked_exp(std::int64_t{term.exp.t} +
                                        2 * std::int64_t{n} * term.exp.u),
                            0},
                           term.coeff});
    }
    return from_terms(std::move(out));
}

double Laurent2::eval(double t_value, double u_value) const {
    double sum = 0.0;
    for (const auto& term : terms_) {
        sum += term.coeff.get_d() * std::pow(t_value, term.exp.t) *
               std::pow(u_value, term.exp.u);
    }
    return sum;
}

Rational Laurent2::eval_exact(const Rational& t_value, const Rational& u_value) const {
    auto power = [](const Rational& base, std::int32_t e) {
        Rational out = 1;
        Rational b = e < 0 ? Rational(1 / base) : base;
        for (std::int64_t k = 0; k < std::abs(std::int64_t{e}); ++k) {
            out *= b;
        }
        return out;
    };
    Rational sum = 0;
    for (const auto& term : terms_) {
        sum += term.coeff * power(t_value, term.exp.t) * power(u_value, term.exp.u);
    }
    return sum;
}

std::string Laurent2::to_string() const { return render(terms_, false); }
std::string Laurent2::to_latex() const { return render(terms_, true); }

Laurent2 laurent_gcd(const Laurent2& a, const Laurent2& b) {
    if (a.is_zero() && b.is_zero()) {
        return {};
    }
    const Stripped sa = strip(a);
    const Stripped sb = strip(b);
    Laurent2 g = unstrip(bgcd(sa.poly, sb.poly), 0, 0);
    return g * Rational(1 / g.leading().coeff);
}

std::optional<Laurent2> laurent_try_divide(const Laurent2& a, const Laurent2& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (a.is_zero()) {
        return Laurent2{};
    }
    if (b.is_monomial()) {
        const Term& m = b.leading();
        return a.times_monomial(Rational(1 / m.coeff), checked_exp(-std::int64_t{m.exp.t}),
                                checked_exp(-std::int64_t{m.exp.u}));
    }
    const Stripped sa = strip(a);
    const Stripped sb = strip(b);
    auto q = btry_div(sa.poly, sb.poly);
    if (!q) {
        return std::nullopt;
    }
    return unstrip(*q, checked_exp(std::int64_t{sa.mt} - sb.mt), checked_exp(std::int64_t{sa.mu} - sb.mu));
}

Laurent2 laurent_divide_exact(const Laurent2& a, const Laurent2& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (a.is_zero()) {
        return {};
    }
    if (b.is_monomial()) {
        const Term& m = b.leading();
        return a.times_monomial(Rational(1 / m.coeff), checked_exp(-std::int64_t{m.exp.t}),
                                checked_exp(-std::int64_t{m.exp.u}));
    }
    const Stripped sa = strip(a);
    const Stripped sb = strip(b);
    return unstrip(bexact_div(sa.poly, sb.poly), checked_exp(std::int64_t{sa.mt} - sb.mt),
                   checked_exp(std::int64_t{sa.mu} - sb.mu));
}

}  // namespace qaw
