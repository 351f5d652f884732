#pragma once

#include "qaw/zsym.hpp"

namespace qaw {

/// Constants shared by every operator application: alpha = (t^2 + t^-2)/2,
/// U_2 = (alpha^2 - 1)(x^2 - 1) and the z-side denominator of D_q,
/// (t^2 - t^-2)(z - 1/z)/2.
class OperatorContext {
public:
    static const OperatorContext& instance();

    [[nodiscard]] const Scalar& alpha() const { return alpha_; }
    [[nodiscard]] const XPoly& u2() const { return u2_; }
    [[nodiscard]] const ZLaurent& dq_denominator() const { return dq_den_; }

private:
    OperatorContext();

    Scalar alpha_;
    XPoly u2_;
    ZLaurent dq_den_;
};

/// Askey-Wilson divided difference D_q, applied exactly on the z-side.
XPoly dq_apply(const XPoly& f);
/// Averaging operator S_q.
XPoly sq_apply(const XPoly& f);
XPoly u2();

}  // namespace qaw
