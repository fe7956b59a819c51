#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ersim/basis.hpp"
#include "ersim/field.hpp"

namespace ersim {

/// Structure of the noise coefficients Phi(v) e_k = g_k(v(.)).
///   Additive           g_k(xi) = c_k u_k with a fixed unit vector u_k,
///   ModeAdditive       Phi e_k = c_k w_k (k-th divergence-free basis mode),
///   LinearMultiplicative g_k(xi) = c_k xi,
///   BoundedGradient    g_k(xi) = c_k tanh(xi) componentwise.
enum class NoiseFamily { Additive, ModeAdditive, LinearMultiplicative, BoundedGradient };

/// Truncated cylindrical Wiener forcing with K scalar Brownian drivers.
struct NoiseModel {
    NoiseFamily family = NoiseFamily::Additive;
    int K = 8;
    std::vector<double> c;   ///< square-summable weights, one per driver
    double L = 1.0;          ///< growth constant of the coefficient bounds

    /// Power-law rule c_k = a k^{-gamma}, k = 1..K.
    static NoiseModel power_law(NoiseFamily family, int K, double a, double gamma, double L);
    static NoiseModel explicit_coeffs(NoiseFamily family, std::vector<double> c, double L);

    /// Enforces sum c_k^2 <= L; throws on violation.
    void validate() const;

    double coeff_sum_sq() const;

    /// Truncation-error proxy sum_{k>K} a^2 k^{-2 gamma} when built from a
    /// power-law rule, 0 otherwise.
    double tail_weight = 0.0;
};

/// Increments of the truncated cylindrical Wiener process: K x steps Gaussian
/// draws of variance dt, fully determined by (seed, path_index).
struct WienerPath {
    int K = 0;
    double dt = 0.0;
    int steps = 0;
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
    std::vector<double> increments;   ///< row major, dB(k, j) = increments[k*steps + j]

    double dB(int k, int j) const { return increments[static_cast<std::size_t>(k) * steps + j]; }

    /// Running value B_k(t_j) = sum of increments up to step j (exclusive).
    std::vector<double> value_at(int j) const;
};

/// Sample the Wiener increments for one path.
WienerPath wiener_increments(int K, double dt, int steps, std::uint64_t seed,
                             std::uint64_t path_index = 0);

/// Evaluate Phi(v) e_k for all k as vector fields on the grid. ModeAdditive
/// needs the basis to resolve the mode profiles.
std::vector<VectorField> apply_phi(const VectorField& v, const NoiseModel& model,
                                   const GalerkinBasis* basis = nullptr);

/// Squared auxiliary-space norm sum_k alpha_k^2 / k^2 (k counted from 1).
double u0_norm(std::span<const double> alpha);

/// Numerical verification of the growth bounds on random samples; returns the
/// worst observed ratio sum|g_k(xi)|^2 / (L(1+|xi|^2)) and gradient sum / L.
struct GrowthCheck {
    double value_ratio = 0.0;
    double gradient_ratio = 0.0;
    bool ok = false;
};
GrowthCheck check_growth(const NoiseModel& model, int n, int samples, std::uint64_t seed);

} // namespace ersim
