#include "qaw/families.hpp"

#include "qaw/awcore.hpp"

#include <stdexcept>

namespace qaw {

OPSFamily::OPSFamily(std::string name, Generator rec_a, Generator rec_b)
    : name_(std::move(name)),
      rec_a_(std::move(rec_a)),
      rec_b_(std::move(rec_b)),
      cache_(std::make_shared<Cache>()) {}

const XPoly& OPSFamily::poly(int n) const {
    static const XPoly zero;
    if (n < 0) {
        return zero;
    }
    const std::lock_guard lock(cache_->mutex);
    auto& polys = cache_->polys;
    if (polys.empty()) {
        polys.emplace_back(1);
    }
    while (static_cast<int>(polys.size()) <= n) {
        const int m = static_cast<int>(polys.size()) - 1;
        // p_{m+1} = (x - a_m) p_m - b_m p_{m-1}
        XPoly next = polys[static_cast<std::size_t>(m)].times_x() -
                     polys[static_cast<std::size_t>(m)] * rec_a(m);
        if (m > 0) {
            next -= polys[static_cast<std::size_t>(m - 1)] * rec_b(m);
        }
        polys.push_back(std::move(next));
    }
    return polys[static_cast<std::size_t>(n)];
}

std::vector<XPoly> ttrr_polys(const OPSFamily& fam, int N) {
    std::vector<XPoly> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        out.push_back(fam.poly(n));
    }
    return out;
}

std::pair<Scalar, Scalar> dual_qhahn_coefficients(const FamilyParams& p, const Scalar& base_pow_n) {
    const Scalar one(1);
    const Scalar& qn = base_pow_n;
    const Scalar qn1 = qn / p.base;
    const Scalar a_inv = p.a.inverse();
    const Scalar rec_a = Scalar(Rational(1, 2)) *
                         (p.a + a_inv - p.a * (one - qn) * (one - p.b * p.c * qn1) -
                          a_inv * (one - p.a * p.b * qn) * (one - p.a * p.c * qn));
    const Scalar rec_b = Scalar(Rational(1, 4)) * (one - p.a * p.b * qn1) *
                         (one - p.a * p.c * qn1) * (one - p.b * p.c * qn1) * (one - qn);
    return {rec_a, rec_b};
}

OPSFamily dual_qhahn_family(const FamilyParams& p) {
    if (p.base.is_zero() || p.base == Scalar(1)) {
        throw std::invalid_argument("family base must differ from 0 and 1");
    }
    return OPSFamily(
        "dual-q-Hahn", [p](int n) { return dual_qhahn_coefficients(p, p.base.pow(n)).first; },
        [p](int n) { return dual_qhahn_coefficients(p, p.base.pow(n)).second; });
}

FamilyParams counterexample_params() {
    return FamilyParams{Scalar(1), Scalar(-1), Scalar::t(), Scalar::monomial(1, 2)};
}

FamilyParams generic_params() {
    return FamilyParams{Scalar::t(), Scalar::monomial(1, 2), Scalar::monomial(1, 3),
                        Scalar::monomial(1, 4)};
}

BasicCoefficients basic_coefficients(const Scalar& v) {
    const Scalar one(1);
    const Scalar half(Rational(1, 2));
    const Scalar t = Scalar::t();
    const Scalar tm2 = Scalar::monomial(1, -2);
    const Scalar v_inv = v.inverse();
    BasicCoefficients out;
    out.alpha = half * (v + v_inv);
    out.gamma = (v - v_inv) / (Scalar::monomial(1, 2) - tm2);
    // q^((2n+1)/4) = v t, q^(-1/2) = t^-2
    out.B = half * ((one + tm2) * v + one - tm2) * v * t;
    // q^((n-1)/2) = v t^-2, q^(n-1/2) = v^2 t^-2
    out.C = Scalar(Rational(1, 4)) * (one + v * tm2) * (one - v) * (one - v * v * tm2);
    // q^(-(2n-1)/4) = v^-1 t
    out.c = out.C * v_inv * t;
    return out;
}

namespace {

Scalar index_value(int n) { return Scalar::monomial(1, checked_exp(2 * std::int64_t{n})); }

RelationCoefficients relation_from(const BasicCoefficients& prev, const BasicCoefficients& cur,
                                   const BasicCoefficients& next) {
    const Scalar& alpha = OperatorContext::instance().alpha();
    const Scalar one(1);
    const Scalar a2m1 = alpha * alpha - one;
    RelationCoefficients r;
    r.c1 = a2m1 * cur.gamma;
    r.c2 = next.c - alpha * cur.c + (one - alpha) * cur.alpha * cur.B;
    r.c3 = (cur.B - alpha * prev.B) * cur.c - a2m1 * cur.gamma * cur.C;
    r.c4 = prev.c * cur.C - alpha * cur.c * prev.C;
    return r;
}

}  // namespace

OPSFamily counterexample_family() {
    return OPSFamily(
        "counterexample", [](int n) { return basic_coefficients(index_value(n)).B; },
        [](int n) { return basic_coefficients(index_value(n)).C; });
}

const BasicCoefficients& CoeffSuite::basic_at(int offset) const {
    if (offset < -2 || offset > 2) {
        throw std::out_of_range("basic coefficient offset outside [-2, 2]");
    }
    return basic[static_cast<std::size_t>(offset + 2)];
}

const RelationCoefficients& CoeffSuite::relation_at(int offset) const {
    if (offset < -1 || offset > 1) {
        throw std::out_of_range("relation coefficient offset outside [-1, 1]");
    }
    return relation[static_cast<std::size_t>(offset + 1)];
}

CoeffSuite coeff_suite(bool symbolic, std::optional<int> n) {
    if (!symbolic && !n) {
        throw std::invalid_argument("concrete coefficient suite needs an index n");
    }
    CoeffSuite s;
    if (symbolic) {
        const BasicCoefficients base = basic_coefficients(Scalar::u());
        for (int k = -2; k <= 2; ++k) {
            auto& slot = s.basic[static_cast<std::size_t>(k + 2)];
            slot = BasicCoefficients{base.alpha.shift_n(k), base.gamma.shift_n(k),
                                     base.B.shift_n(k), base.C.shift_n(k), base.c.shift_n(k)};
        }
    } else {
        for (int k = -2; k <= 2; ++k) {
            s.basic[static_cast<std::size_t>(k + 2)] = basic_coefficients(index_value(*n + k));
        }
    }
    for (int k = -1; k <= 1; ++k) {
        s.relation[static_cast<std::size_t>(k + 1)] =
            relation_from(s.basic_at(k - 1), s.basic_at(k), s.basic_at(k + 1));
    }

    const auto& b0 = s.basic_at(0);
    const auto& bm1 = s.basic_at(-1);
    const auto& bm2 = s.basic_at(-2);
    const auto& bp1 = s.basic_at(1);
    const auto& r0 = s.relation_at(0);
    const auto& rm1 = s.relation_at(-1);
    s.alpha_n = b0.alpha;
    s.gamma_n = b0.gamma;
    s.B_n = b0.B;
    s.C_n = b0.C;
    s.c_n = b0.c;
    s.c_n1 = r0.c1;
    s.c_n2 = r0.c2;
    s.c_n3 = r0.c3;
    s.c_n4 = r0.c4;

    const Scalar& alpha = OperatorContext::instance().alpha();
    const Scalar one(1);
    const Scalar a2m1 = alpha * alpha - one;
    s.d_k1 = a2m1 * b0.alpha + alpha * r0.c1;
    s.d_k2 = a2m1 * (b0.c + b0.alpha * (b0.B + bp1.B)) + alpha * r0.c2 - (b0.B - alpha * bp1.B) * r0.c1;
    const Scalar d3_common = a2m1 * ((b0.B + bm1.B) * b0.c + b0.alpha * (b0.B * b0.B + b0.C + bp1.C - one)) +
                             alpha * r0.c1 * bp1.C - rm1.c1 * b0.C + alpha * r0.c3;
    s.d_k3 = d3_common + (alpha - one) * r0.c2 * b0.B;
    s.d_k3_shifted = d3_common + (alpha - one) * r0.c2 * bp1.B;
    s.d_k4 = a2m1 * ((b0.B + bm1.B) * b0.alpha * b0.C + (b0.C + bm1.B * bm1.B + bm1.C - one) * b0.c) -
             (rm1.c2 - alpha * r0.c2) * b0.C - (b0.B - alpha * bm1.B) * r0.c3 + alpha * r0.c4;
    s.d_k5 = a2m1 * bm1.C * (b0.alpha * b0.C + b0.c * (bm1.B + bm2.B)) + alpha * r0.c3 * bm1.C -
             rm1.c3 * b0.C - (b0.B - alpha * bm2.B) * r0.c4;
    s.d_k6 = a2m1 * b0.c * bm1.C * bm2.C + alpha * r0.c4 * bm2.C - rm1.c4 * b0.C;
    return s;
}

Scalar qpochhammer(const Scalar& a, const Scalar& base, int k) {
    if (k < 0) {
        throw std::invalid_argument("q-Pochhammer length must be nonnegative");
    }
    Scalar out(1);
    Scalar power(1);
    for (int j = 0; j < k; ++j) {
        out *= Scalar(1) - a * power;
        power *= base;
    }
    return out;
}

XPoly aw_hyp_poly(int n, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                  const Scalar& base) {
    if (n < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    if (a.is_zero()) {
        throw std::invalid_argument("parameter a must be nonzero");
    }
    const Scalar one(1);
    const Scalar ab = a * b;
    const Scalar ac = a * c;
    const Scalar ad = a * d;
    const Scalar top2 = a * b * c * d * base.pow(n - 1);
    const Scalar qmn = base.pow(-n);

    // Term k of the 4phi3 sum is (prod_{j<k} numer_j / denom_j) times
    // (a z, a/z; base)_k. Over the common denominator prod_{j<n} denom_j the
    // k-th numerator is prod_{j<k} numer_j * prod_{j>=k} denom_j.
    std::vector<Scalar> numer;
    std::vector<Scalar> denom;
    Scalar bk(1);
    for (int j = 0; j < n; ++j) {
        numer.push_back((one - qmn * bk) * (one - top2 * bk) * base);
        denom.push_back((one - ab * bk) * (one - ac * bk) * (one - ad * bk) * (one - base * bk));
        if (denom.back().is_zero()) {
            throw DivisionByZero("degenerate parameters: 4phi3 denominator vanishes");
        }
        bk *= base;
    }
    std::vector<Scalar> denom_tail(static_cast<std::size_t>(n) + 1, one);
    for (int j = n - 1; j >= 0; --j) {
        denom_tail[static_cast<std::size_t>(j)] =
            denom_tail[static_cast<std::size_t>(j) + 1] * denom[static_cast<std::size_t>(j)];
    }

    SymPoly zfactor(ZLaurent(0, {one}));
    Scalar numer_head(1);
    Scalar ak = a;
    SymPoly sum;
    for (int k = 0; k <= n; ++k) {
        sum = sum + SymPoly(zfactor.laurent() * (numer_head * denom_tail[static_cast<std::size_t>(k)]));
        if (k == n) {
            break;
        }
        numer_head *= numer[static_cast<std::size_t>(k)];
        zfactor = zfactor * SymPoly(ZLaurent(-1, {-ak, one + ak * ak, -ak}));
        ak *= base;
    }
    // The prefactor a^-n (ab, ac, ad; base)_n and the common denominator are
    // constants in x and cancel in the monic normalization.
    XPoly p = z_to_x(sum);
    if (p.degree() != n) {
        throw std::domain_error("degenerate parameters: leading coefficient vanishes");
    }
    return p * p.leading().inverse();
}

std::vector<OracleRow> oracle_agreement(const FamilyParams& p, int nmax) {
    const OPSFamily fam = dual_qhahn_family(p);
    std::vector<OracleRow> rows;
    for (int n = 0; n <= nmax; ++n) {
        rows.push_back({n, aw_hyp_poly(n, p.a, p.b, p.c, Scalar(), p.base) == fam.poly(n)});
    }
    return rows;
}

}  // namespace qaw
