#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

namespace ersim {

/// Parameters of the shear-dependent stress law S(eta) = mu (1+|eta|)^{p-2} eta.
struct StressParams {
    double mu = 1.0;

    void validate() const {
        if (!(mu > 0.0)) throw std::invalid_argument("StressParams: mu must be positive");
    }
};

/// Small dense symmetric n x n tensor (n = 2 or 3), row major.
class SymTensor {
public:
    SymTensor() = default;
    explicit SymTensor(int n) : n_(n) {
        if (n != 2 && n != 3) throw std::invalid_argument("SymTensor: n must be 2 or 3");
        a_.fill(0.0);
    }

    /// Build from a full row-major matrix; rejects non-symmetric input.
    static SymTensor from_matrix(int n, std::span<const double> m, double tol = 1e-12) {
        SymTensor t(n);
        double scale = 0.0;
        for (int i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(m[i]));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (std::abs(m[i * n + j] - m[j * n + i]) > tol * std::max(1.0, scale))
                    throw std::invalid_argument("SymTensor: input matrix is not symmetric");
                t(i, j) = 0.5 * (m[i * n + j] + m[j * n + i]);
            }
        }
        return t;
    }

    int dim() const { return n_; }
    double& operator()(int i, int j) { return a_[i * n_ + j]; }
    double operator()(int i, int j) const { return a_[i * n_ + j]; }

    double frobenius() const { return std::sqrt(dot(*this)); }

    /// Double contraction A : B.
    double dot(const SymTensor& o) const {
        double acc = 0.0;
        for (int i = 0; i < n_ * n_; ++i) acc += a_[i] * o.a_[i];
        return acc;
    }

    SymTensor scaled(double c) const {
        SymTensor t = *this;
        for (auto& x : t.a_) x *= c;
        return t;
    }

    SymTensor operator+(const SymTensor& o) const {
        SymTensor t = *this;
        for (int i = 0; i < n_ * n_; ++i) t.a_[i] += o.a_[i];
        return t;
    }
    SymTensor operator-(const SymTensor& o) const {
        SymTensor t = *this;
        for (int i = 0; i < n_ * n_; ++i) t.a_[i] -= o.a_[i];
        return t;
    }

private:
    int n_ = 2;
    std::array<double, 9> a_{};
};

// --- pointwise scalar kernels (used by the solver on whole fields) ---------

/// mu (1 + r)^{p-2} for r = |eta|.
inline double stress_factor(double r, double p, double mu) {
    if (p == 2.0) return mu;
    return mu * std::pow(1.0 + r, p - 2.0);
}

/// (1 + r)^{(p-2)/2} for r = |eta|.
inline double fp_factor(double r, double p) {
    if (p == 2.0) return 1.0;
    return std::pow(1.0 + r, 0.5 * (p - 2.0));
}

// --- tensor-level operations ------------------------------------------------

/// Extra stress S(eta) = mu (1+|eta|)^{p-2} eta. Requires p > 1.
SymTensor stress(const SymTensor& eta, double p, const StressParams& params);

/// Regularity quantity F_p(eta) = (1+|eta|)^{(p-2)/2} eta.
SymTensor f_p(const SymTensor& eta, double p);

/// Quadratic form of the stress derivative, D S(eta)(zeta, zeta), by analytic
/// differentiation. Coercive: >= min(p-1,1) mu (1+|eta|)^{p-2} |zeta|^2.
double stress_form(const SymTensor& eta, const SymTensor& zeta, double p,
                   const StressParams& params);

/// (S(eta1) - S(eta2)) : (eta1 - eta2); nonnegative up to rounding.
double monotonicity_gap(const SymTensor& eta1, const SymTensor& eta2, double p,
                        const StressParams& params);

} // namespace ersim
