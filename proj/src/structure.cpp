#include "qaw/structure.hpp"

#include "qaw/awcore.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace qaw {

std::vector<Scalar> expand_in_basis(const XPoly& f, const OPSFamily& fam) {
    if (f.is_zero()) {
        return {};
    }
    std::vector<Scalar> out(static_cast<std::size_t>(f.degree()) + 1);
    XPoly rest = f;
    while (!rest.is_zero()) {
        const int k = rest.degree();
        const XPoly& pk = fam.poly(k);
        if (pk.degree() != k || !(pk.leading() == Scalar(1))) {
            throw std::logic_error("basis polynomial is not monic of the expected degree");
        }
        const Scalar e = rest.leading();
        out[static_cast<std::size_t>(k)] = e;
        XPoly next = rest - pk * e;
        if (next.degree() >= k) {
            throw std::logic_error("leading-term elimination did not lower the degree");
        }
        rest = std::move(next);
    }
    return out;
}

Bandwidth bandwidth_of(const std::map<int, Scalar>& coefficients) {
    Bandwidth b;
    for (const auto& [offset, c] : coefficients) {
        if (c.is_zero()) {
            continue;
        }
        if (b.empty) {
            b = Bandwidth{false, 0, 0};
        }
        b.r = std::max(b.r, -offset);
        b.s = std::max(b.s, offset);
    }
    return b;
}

namespace {

std::map<int, Scalar> offsets_from(const std::vector<Scalar>& expansion, int n) {
    std::map<int, Scalar> out;
    for (std::size_t k = 0; k < expansion.size(); ++k) {
        if (!expansion[k].is_zero()) {
            out.emplace(static_cast<int>(k) - n, expansion[k]);
        }
    }
    return out;
}

// Compares against expected entries; offsets reaching below p_0 are dropped.
void compare(StructureReport& report, const std::map<int, Scalar>& expected) {
    std::map<int, Scalar> all = report.coefficients;
    for (const auto& [offset, value] : expected) {
        if (report.n + offset < 0) {
            continue;
        }
        all[offset] -= value;
    }
    report.residuals.clear();
    for (auto& [offset, value] : all) {
        if (!value.is_zero()) {
            report.residuals.emplace(offset, value);
        }
    }
    report.pass = report.residuals.empty();
}

}  // namespace

StructureReport structure_relation(const OPSFamily& fam, const XPoly& pi, int n) {
    if (n < 0) {
        throw std::invalid_argument("structure relation index must be nonnegative");
    }
    StructureReport report;
    report.check = "structure";
    report.n = n;
    report.coefficients = offsets_from(expand_in_basis(pi * dq_apply(fam.poly(n)), fam), n);
    report.bandwidth = bandwidth_of(report.coefficients);
    return report;
}

PropositionReports verify_proposition_at(const OPSFamily& fam, int n) {
    const CoeffSuite suite = coeff_suite(false, n);
    PropositionReports out;

    out.sq.check = "proposition.sq";
    out.sq.n = n;
    out.sq.coefficients = offsets_from(expand_in_basis(sq_apply(fam.poly(n)), fam), n);
    out.sq.bandwidth = bandwidth_of(out.sq.coefficients);
    compare(out.sq, {{0, suite.alpha_n}, {-1, suite.c_n}});

    out.dq = structure_relation(fam, u2(), n);
    out.dq.check = "proposition.dq";
    compare(out.dq, {{1, suite.c_n1}, {0, suite.c_n2}, {-1, suite.c_n3}, {-2, suite.c_n4}});
    return out;
}

std::vector<PropositionReports> verify_proposition(int nmax, int jobs) {
    if (nmax < 0) {
        throw std::invalid_argument("n-max must be nonnegative");
    }
    const OPSFamily fam = counterexample_family();
    std::vector<PropositionReports> out(static_cast<std::size_t>(nmax) + 1);
    if (jobs <= 1) {
        for (int n = 0; n <= nmax; ++n) {
            out[static_cast<std::size_t>(n)] = verify_proposition_at(fam, n);
        }
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    std::mutex error_mutex;
    std::exception_ptr error;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (int n = next++; n <= nmax; n = next++) {
                try {
                    out[static_cast<std::size_t>(n)] = verify_proposition_at(fam, n);
                } catch (...) {
                    const std::lock_guard lock(error_mutex);
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

BandwidthSummary summarize_bandwidth(const std::vector<StructureReport>& reports) {
    BandwidthSummary summary;
    summary.nmax = static_cast<int>(reports.size()) - 1;
    for (const auto& report : reports) {
        BandwidthRow row{report.n, report.bandwidth, {}};
        if (auto it = report.coefficients.find(-2); it != report.coefficients.end()) {
            row.offset_minus2 = it->second;
        }
        if (!row.bandwidth.empty) {
            summary.max_r = std::max(summary.max_r, row.bandwidth.r);
            summary.max_s = std::max(summary.max_s, row.bandwidth.s);
        }
        if (report.n >= 2 && row.offset_minus2.is_zero()) {
            summary.offset_minus2_nonzero = false;
        }
        summary.rows.push_back(std::move(row));
    }
    summary.pass = summary.max_r == 2 && summary.max_s == 1 && summary.offset_minus2_nonzero;
    return summary;
}

BandwidthSummary bandwidth_scan(const OPSFamily& fam, const XPoly& pi, int nmax) {
    if (nmax < 2) {
        throw std::invalid_argument("bandwidth scan needs n-max >= 2");
    }
    std::vector<StructureReport> reports;
    for (int n = 0; n <= nmax; ++n) {
        reports.push_back(structure_relation(fam, pi, n));
    }
    return summarize_bandwidth(reports);
}

Scalar c4_factorization_residual() {
    const CoeffSuite s = coeff_suite(true);
    const Scalar t = Scalar::t();
    const Scalar half_gap = (Scalar::monomial(1, 2) - Scalar::monomial(1, -2)) * Scalar(Rational(1, 2));
    return s.c_n4 - s.basic_at(-1).C * s.C_n * Scalar::u().inverse() * t * half_gap;
}

}  // namespace qaw
