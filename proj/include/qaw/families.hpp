#pragma once

#include "qaw/zsym.hpp"

#include <array>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qaw {

/// Monic orthogonal polynomials from x p_n = p_{n+1} + a(n) p_n + b(n) p_{n-1}.
///
/// Polynomials are cached on demand. Copies share the cache, which is guarded
/// so concurrent callers only ever observe fully computed entries.
class OPSFamily {
public:
    using Generator = std::function<Scalar(int)>;

    OPSFamily(std::string name, Generator rec_a, Generator rec_b);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] Scalar rec_a(int n) const { return rec_a_(n); }
    [[nodiscard]] Scalar rec_b(int n) const { return n == 0 ? Scalar() : rec_b_(n); }

    /// p_n; p_{-1} and below are the zero polynomial. The reference stays
    /// valid while any copy of this family is alive.
    [[nodiscard]] const XPoly& poly(int n) const;

private:
    struct Cache {
        std::mutex mutex;
        std::deque<XPoly> polys;
    };

    std::string name_;
    Generator rec_a_;
    Generator rec_b_;
    std::shared_ptr<Cache> cache_;
};

/// p_0 .. p_N.
std::vector<XPoly> ttrr_polys(const OPSFamily& fam, int N);

/// Parameters (a, b, c | base) of a continuous dual q-Hahn family.
struct FamilyParams {
    Scalar a;
    Scalar b;
    Scalar c;
    Scalar base;
};

/// Recurrence coefficients (a_n, b_n) given base^n as a scalar, so the same
/// formula serves concrete n and the symbolic base^n = u^m.
std::pair<Scalar, Scalar> dual_qhahn_coefficients(const FamilyParams& p, const Scalar& base_pow_n);
OPSFamily dual_qhahn_family(const FamilyParams& p);

/// (1, -1, t | t^2), i.e. (1, -1, q^(1/4) | q^(1/2)).
FamilyParams counterexample_params();

/// Closed-form coefficients at index n, given v = q^(n/2) as a scalar.
struct BasicCoefficients {
    Scalar alpha;  // (q^(n/2) + q^(-n/2)) / 2
    Scalar gamma;  // (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))
    Scalar B;
    Scalar C;
    Scalar c;  // C_n q^(-(2n-1)/4)
};
BasicCoefficients basic_coefficients(const Scalar& v);

/// The four coefficients of U_2 D_q P_n against P_{n+1}, P_n, P_{n-1}, P_{n-2}.
struct RelationCoefficients {
    Scalar c1;
    Scalar c2;
    Scalar c3;
    Scalar c4;
};

/// Counterexample family built from the closed forms B_n, C_n.
OPSFamily counterexample_family();

struct CoeffSuite {
    /// Offset 0 is n (or k); entries cover offsets -2 .. 2.
    std::array<BasicCoefficients, 5> basic;
    /// Offsets -1 .. 1.
    std::array<RelationCoefficients, 3> relation;

    Scalar alpha_n, gamma_n, B_n, C_n, c_n;
    Scalar c_n1, c_n2, c_n3, c_n4;
    Scalar d_k1, d_k2, d_k3, d_k4, d_k5, d_k6;
    /// d_k3 with the factor B_{k+1} in place of B_k.
    Scalar d_k3_shifted;

    [[nodiscard]] const BasicCoefficients& basic_at(int offset) const;
    [[nodiscard]] const RelationCoefficients& relation_at(int offset) const;
};

/// Symbolic suite (u free, neighbours by shift_n) or the suite at concrete n
/// computed directly from v = t^(2(n+k)).
CoeffSuite coeff_suite(bool symbolic, std::optional<int> n = std::nullopt);

/// (a; base)_k
Scalar qpochhammer(const Scalar& a, const Scalar& base, int k);

/// Monic Askey-Wilson polynomial of degree n from the terminating 4phi3 sum.
XPoly aw_hyp_poly(int n, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                  const Scalar& base);

/// (t, t^2, t^3 | t^4): a generic dual q-Hahn parameter set.
FamilyParams generic_params();

struct OracleRow {
    int n = 0;
    bool equal = false;
};
/// Compares the monic 4phi3 polynomial (d = 0) with the recurrence for n <= nmax.
std::vector<OracleRow> oracle_agreement(const FamilyParams& p, int nmax);

}  // namespace qaw
