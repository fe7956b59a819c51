#pragma once

#include <vector>

#include "ersim/exponent.hpp"

namespace ersim {

/// Scalar samples on the space-time cylinder Q = (0,T) x T^n, stored as
/// slices at uniform times j*dt, j = 0..steps.
struct SpaceTimeScalar {
    Grid grid{2, 4};
    double dt = 0.0;
    std::vector<std::vector<double>> slices;

    int steps() const { return static_cast<int>(slices.size()) - 1; }
    double T() const { return dt * steps(); }
};

/// Modular int_Q |f|^{p(t,x)} dx dt by trapezoidal space-time quadrature.
double modular(const SpaceTimeScalar& f, const ExponentField& p);

/// Luxemburg norm inf{ k >= 0 : modular(f/k) <= 1 } by bisection; equals the
/// classical L^p(Q) norm when p is constant.
double luxemburg_norm(const SpaceTimeScalar& f, const ExponentField& p);

/// Classical L^q(Q) norm with the same quadrature (cross-check oracle).
double classical_lq_norm(const SpaceTimeScalar& f, double q);

/// Energy functional sup_j ||v(t_j)||_2^2 + modular(|eps(v)|): the discrete
/// sup runs over the stored steps, the modular over the same slices.
double energy_functional(const std::vector<double>& v_l2_sq,
                         const SpaceTimeScalar& eps_magnitude,
                         const ExponentField& p);

} // namespace ersim
