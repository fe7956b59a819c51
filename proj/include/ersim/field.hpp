#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ersim/fft.hpp"
#include "ersim/grid.hpp"

namespace ersim {

/// Which representation(s) a field currently stores.
enum class Rep : std::uint8_t { Physical = 0, Spectral = 1 };

/// Scalar field on the torus holding real samples and/or Fourier coefficients.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid_(g) {}

    static ScalarField physical(const Grid& g, std::vector<double> values) {
        if (values.size() != g.size())
            throw std::invalid_argument("ScalarField: sample count does not match grid");
        ScalarField f(g);
        f.phys_ = std::move(values);
        f.has_phys_ = true;
        return f;
    }

    static ScalarField spectral(const Grid& g, std::vector<std::complex<double>> coef) {
        if (coef.size() != g.size())
            throw std::invalid_argument("ScalarField: coefficient count does not match grid");
        ScalarField f(g);
        f.spec_ = std::move(coef);
        f.has_spec_ = true;
        return f;
    }

    static ScalarField zero(const Grid& g) {
        return physical(g, std::vector<double>(g.size(), 0.0));
    }

    const Grid& grid() const { return grid_; }
    bool has_physical() const { return has_phys_; }
    bool has_spectral() const { return has_spec_; }

    const std::vector<double>& phys() const {
        if (!has_phys_) throw std::logic_error("ScalarField: physical representation absent");
        return phys_;
    }
    const std::vector<std::complex<double>>& spec() const {
        if (!has_spec_) throw std::logic_error("ScalarField: spectral representation absent");
        return spec_;
    }

    /// Fill the missing representation in place.
    ScalarField& require_spectral() {
        if (!has_spec_) {
            spec_ = fft::forward_real(grid_, phys());
            has_spec_ = true;
        }
        return *this;
    }
    ScalarField& require_physical() {
        if (!has_phys_) {
            phys_ = fft::inverse_to_real(grid_, spec());
            has_phys_ = true;
        }
        return *this;
    }

private:
    Grid grid_{2, 4};
    std::vector<double> phys_;
    std::vector<std::complex<double>> spec_;
    bool has_phys_ = false;
    bool has_spec_ = false;
};

/// Vector field with n scalar components.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Grid& g) : grid_(g), comp_(g.n, ScalarField(g)) {}

    static VectorField physical(const Grid& g, std::vector<std::vector<double>> comps) {
        if (static_cast<int>(comps.size()) != g.n)
            throw std::invalid_argument("VectorField: wrong component count");
        VectorField v(g);
        for (int i = 0; i < g.n; ++i) v.comp_[i] = ScalarField::physical(g, std::move(comps[i]));
        return v;
    }

    static VectorField zero(const Grid& g) {
        VectorField v(g);
        for (int i = 0; i < g.n; ++i) v.comp_[i] = ScalarField::zero(g);
        return v;
    }

    const Grid& grid() const { return grid_; }
    int dim() const { return grid_.n; }
    ScalarField& comp(int i) { return comp_.at(i); }
    const ScalarField& comp(int i) const { return comp_.at(i); }

    VectorField& require_spectral() {
        for (auto& c : comp_) c.require_spectral();
        return *this;
    }
    VectorField& require_physical() {
        for (auto& c : comp_) c.require_physical();
        return *this;
    }

    bool empty() const { return comp_.empty(); }

private:
    Grid grid_{2, 4};
    std::vector<ScalarField> comp_;
};

/// Rank-two tensor field, components stored row major: entry(i,j) = comp[i*n+j].
class TensorField {
public:
    TensorField() = default;
    explicit TensorField(const Grid& g, bool symmetric = false)
        : grid_(g), comp_(g.n * g.n, ScalarField(g)), symmetric_(symmetric) {}

    const Grid& grid() const { return grid_; }
    int dim() const { return grid_.n; }
    bool symmetric() const { return symmetric_; }

    ScalarField& entry(int i, int j) { return comp_.at(i * grid_.n + j); }
    const ScalarField& entry(int i, int j) const { return comp_.at(i * grid_.n + j); }

    TensorField& require_physical() {
        for (auto& c : comp_) c.require_physical();
        return *this;
    }
    TensorField& require_spectral() {
        for (auto& c : comp_) c.require_spectral();
        return *this;
    }

private:
    Grid grid_{2, 4};
    std::vector<ScalarField> comp_;
    bool symmetric_ = false;
};

} // namespace ersim
