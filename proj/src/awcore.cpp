#include "qaw/awcore.hpp"

#include <stdexcept>

namespace qaw {

OperatorContext::OperatorContext() {
    const Scalar t2 = Scalar::monomial(1, 2);
    const Scalar tm2 = Scalar::monomial(1, -2);
    alpha_ = (t2 + tm2) * Scalar(Rational(1, 2));
    const Scalar lead = alpha_ * alpha_ - Scalar(1);
    u2_ = XPoly(std::vector<Scalar>{-lead, 0, lead});
    const Scalar half_gap = (t2 - tm2) * Scalar(Rational(1, 2));
    dq_den_ = ZLaurent(-1, {-half_gap, 0, half_gap});
}

const OperatorContext& OperatorContext::instance() {
    static const OperatorContext ctx;
    return ctx;
}

XPoly dq_apply(const XPoly& f) {
    if (f.degree() <= 0) {
        return {};
    }
    const SymPoly big_f = x_to_z(f);
    const ZLaurent diff = z_scale(big_f, 1) - z_scale(big_f, -1);
    ZLaurent quot;
    try {
        quot = divide_exact(diff, OperatorContext::instance().dq_denominator());
    } catch (const std::domain_error& e) {
        throw std::logic_error(std::string("D_q: exact division failed: ") + e.what());
    }
    return z_to_x(SymPoly(std::move(quot)));
}

XPoly sq_apply(const XPoly& f) {
    const SymPoly big_f = x_to_z(f);
    ZLaurent sum = z_scale(big_f, 1) + z_scale(big_f, -1);
    sum *= Scalar(Rational(1, 2));
    return z_to_x(SymPoly(std::move(sum)));
}

XPoly u2() { return OperatorContext::instance().u2(); }

}  // namespace qaw
