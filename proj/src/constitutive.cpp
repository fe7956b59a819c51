#include "ersim/constitutive.hpp"

namespace ersim {

namespace {

void check_exponent(double p) {
    if (!(p > 1.0)) throw std::invalid_argument("constitutive: exponent must satisfy p > 1");
}

} // namespace

SymTensor stress(const SymTensor& eta, double p, const StressParams& params) {
    check_exponent(p);
    params.validate();
    return eta.scaled(stress_factor(eta.frobenius(), p, params.mu));
}

SymTensor f_p(const SymTensor& eta, double p) {
    check_exponent(p);
    return eta.scaled(fp_factor(eta.frobenius(), p));
}

double stress_form(const SymTensor& eta, const SymTensor& zeta, double p,
                   const StressParams& params) {
    check_exponent(p);
    params.validate();
    const double r = eta.frobenius();
    const double z2 = zeta.dot(zeta);
    // D S(eta)[zeta] = mu [ (p-2)(1+r)^{p-3} (eta:zeta)/r eta + (1+r)^{p-2} zeta ];
    // the radial term vanishes continuously as eta -> 0.
    double radial = 0.0;
    if (r > 0.0) {
        const double ez = eta.dot(zeta);
        radial = (p - 2.0) * std::pow(1.0 + r, p - 3.0) * ez * ez / r;
    }
    return params.mu * (radial + std::pow(1.0 + r, p - 2.0) * z2);
}

double monotonicity_gap(const SymTensor& eta1, const SymTensor& eta2, double p,
                        const StressParams& params) {
    SymTensor diff = eta1 - eta2;
    return (stress(eta1, p, params) - stress(eta2, p, params)).dot(diff);
}

} // namespace ersim
