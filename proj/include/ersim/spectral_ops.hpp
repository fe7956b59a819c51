#pragma once

#include "ersim/field.hpp"

namespace ersim {

// Fourier spectral toolkit on the torus. All operations are pure: inputs are
// never mutated, outputs carry the representations they are defined in.
// Convention: basis functions exp(2*pi*i k.x) on [0,1]^n, so d/dx_a maps a
// coefficient c_k to (2*pi*i k_a) c_k. Nyquist modes (k_a = m/2) are zeroed
// by derivative and projection operators to keep fields real valued.

/// Attach the spectral representation (coefficients of exp(2pi i k.x)).
VectorField fft_forward(const VectorField& v);
ScalarField fft_forward(const ScalarField& s);

/// Attach the physical representation.
VectorField fft_inverse(const VectorField& v);
ScalarField fft_inverse(const ScalarField& s);

/// gradient(v)(i,j) = d v_j / d x_i.
TensorField gradient(const VectorField& v);

/// Gradient of a scalar field.
VectorField gradient(const ScalarField& s);

/// div v = sum_i d v_i / d x_i.
ScalarField divergence(const VectorField& v);

/// Divergence of a tensor, (div T)_j = sum_i d T_ij / d x_i.
VectorField divergence(const TensorField& t);

/// Symmetric gradient eps(v) = (grad v + grad v^T)/2; output exactly symmetric.
TensorField sym_gradient(const VectorField& v);

/// Remove the gradient part: v -> v - grad(Lap^-1 div v). Mean mode preserved.
VectorField leray_project(const VectorField& v);

/// Zero-mean inverse Laplacian; the mean of the input is subtracted first.
ScalarField inv_laplacian(const ScalarField& s);

/// Laplacian of a scalar field.
ScalarField laplacian(const ScalarField& s);

/// Zero all coefficients with any |k_a| above the grid's dealias cutoff.
void dealias_inplace(std::vector<std::complex<double>>& spec, const Grid& g);
VectorField dealias(const VectorField& v);

// --- quadrature -----------------------------------------------------------
// Trapezoidal rule on the uniform periodic grid (plain average times volume).

double integral(const ScalarField& s);
double l2_norm_sq(const ScalarField& s);
double l2_norm_sq(const VectorField& v);
double l2_norm_sq(const TensorField& t);
double lp_norm(const ScalarField& s, double p);
double l2_inner(const VectorField& a, const VectorField& b);

/// Pointwise Frobenius magnitude of a tensor field (physical rep).
ScalarField tensor_magnitude(const TensorField& t);

} // namespace ersim
