#pragma once

#include "qaw/families.hpp"

#include <map>
#include <string>
#include <vector>

namespace qaw {

/// Coefficients e_0 .. e_m with f = sum e_k p_k.
std::vector<Scalar> expand_in_basis(const XPoly& f, const OPSFamily& fam);

struct Bandwidth {
    bool empty = true;  // zero relation
    int r = 0;
    int s = 0;
};

/// Expansion of one side of a structure relation, indexed by offset from n.
struct StructureReport {
    std::string check;
    int n = 0;
    std::map<int, Scalar> coefficients;
    Bandwidth bandwidth;
    bool pass = true;
    /// Offset -> computed minus expected, nonzero entries only.
    std::map<int, Scalar> residuals;
};

Bandwidth bandwidth_of(const std::map<int, Scalar>& coefficients);

/// Expands pi * D_q p_n in the family basis.
StructureReport structure_relation(const OPSFamily& fam, const XPoly& pi, int n);

/// S_q P_n and U_2 D_q P_n for the counterexample family, compared with the
/// closed-form coefficients.
struct PropositionReports {
    StructureReport sq;
    StructureReport dq;
};
PropositionReports verify_proposition_at(const OPSFamily& fam, int n);
/// Reports in index order; jobs > 1 spreads the indices over worker threads.
std::vector<PropositionReports> verify_proposition(int nmax, int jobs = 1);

struct BandwidthRow {
    int n = 0;
    Bandwidth bandwidth;
    Scalar offset_minus2;
};

struct BandwidthSummary {
    int nmax = 0;
    std::vector<BandwidthRow> rows;
    int max_r = 0;
    int max_s = 0;
    /// Offset -2 coefficient nonzero for every n in [2, nmax].
    bool offset_minus2_nonzero = true;
    bool pass = false;
};

BandwidthSummary bandwidth_scan(const OPSFamily& fam, const XPoly& pi, int nmax);
/// Summary over already computed relation reports (index order, starting at 0).
BandwidthSummary summarize_bandwidth(const std::vector<StructureReport>& reports);

/// c_{n,4} - C_{n-1} C_n q^(-(2n-1)/4) (q^(1/2) - q^(-1/2)) / 2, symbolic in u.
Scalar c4_factorization_residual();

}  // namespace qaw
