#pragma once

#include <complex>
#include <vector>

#include "ersim/field.hpp"

namespace ersim {

/// One divergence-free trigonometric eigenfunction of the Stokes operator.
/// Constant modes are the unit vectors e_axis (eigenvalue 1); oscillatory
/// modes are sqrt(2) cos(2pi k.x) d and sqrt(2) sin(2pi k.x) d with unit
/// polarisation d orthogonal to k, eigenvalue 1 + 4 pi^2 |k|^2.
struct BasisMode {
    enum class Kind { Constant, Cos, Sin };
    Kind kind = Kind::Constant;
    std::array<int, 3> k{0, 0, 0};
    std::array<double, 3> d{0.0, 0.0, 0.0};   ///< unit polarisation (axis for constants)
    double lambda = 1.0;
    int k_sq = 0;
};

/// Orthonormal Galerkin basis of the first N Stokes eigenfunctions on the
/// torus, ordered by (|k|^2, lexicographic k, polarisation, cos before sin).
class GalerkinBasis {
public:
    GalerkinBasis() = default;

    /// First N modes of the canonical ordering.
    static GalerkinBasis first_n(const Grid& g, int N);

    /// All modes with |k|^2 <= kmax^2 (plus the constant modes).
    static GalerkinBasis covering(const Grid& g, int kmax);

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(modes_.size()); }
    const BasisMode& mode(int i) const { return modes_.at(i); }
    double lambda(int i) const { return modes_.at(i).lambda; }

    /// Largest |k_a| over all modes.
    int max_axis_wavenumber() const { return max_axis_k_; }

    /// Accumulate sum_k C_k w_k into per-component spectra (sized m^n each).
    void synthesize(std::span<const double> C,
                    std::vector<std::vector<std::complex<double>>>& spec) const;

    /// Velocity field sum_k C_k w_k with both representations attached.
    VectorField synthesize_field(std::span<const double> C) const;

    /// L2 projections <v, w_k> for all modes.
    std::vector<double> project(const VectorField& v) const;

    /// Projection of per-component spectra (same convention as synthesize).
    std::vector<double> project_spectra(
        const std::vector<std::vector<std::complex<double>>>& spec) const;

    /// Gram matrix of L2 inner products (for orthonormality checks).
    std::vector<double> gram_matrix() const;

private:
    static std::vector<BasisMode> enumerate(const Grid& g, int max_k_sq);

    Grid grid_{2, 4};
    std::vector<BasisMode> modes_;
    int max_axis_k_ = 0;
};

/// Number of modes needed to cover |k|^2 <= kmax^2 in dimension n.
int modes_covering(const Grid& g, int kmax);

} // namespace ersim
