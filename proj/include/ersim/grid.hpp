#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace ersim {

/// Uniform collocation grid on the flat torus [0,1]^n with periodic
/// identification. Points per axis must be an even power of two, m >= 4.
struct Grid {
    int n = 2;                        ///< spatial dimension, 2 or 3
    int m = 16;                       ///< points per axis
    double dealias_fraction = 2.0 / 3.0;

    Grid() = default;
    Grid(int n_, int m_, double dealias = 2.0 / 3.0)
        : n(n_), m(m_), dealias_fraction(dealias) {
        if (n != 2 && n != 3)
            throw std::invalid_argument("Grid: dimension must be 2 or 3");
        if (m < 4 || (m & (m - 1)) != 0)
            throw std::invalid_argument("Grid: m must be a power of two >= 4");
        if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
            throw std::invalid_argument("Grid: dealias_fraction must lie in (0,1]");
    }

    /// Total number of collocation points m^n.
    std::size_t size() const {
        std::size_t s = 1;
        for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(m);
        return s;
    }

    /// Grid spacing 1/m.
    double h() const { return 1.0 / m; }

    /// Signed wavenumber for FFT bin index j in [0,m).
    int freq(int j) const { return j <= m / 2 ? j : j - m; }

    /// Largest |k_i| kept by the dealiasing rule.
    int dealias_cutoff() const {
        return static_cast<int>(dealias_fraction * (m / 2));
    }

    /// Flat row-major index of the point (i0,i1[,i2]).
    std::size_t index(const std::array<int, 3>& i) const {
        std::size_t idx = 0;
        for (int a = 0; a < n; ++a) idx = idx * m + static_cast<std::size_t>(i[a]);
        return idx;
    }

    /// Decode a flat index into per-axis point indices.
    std::array<int, 3> decode(std::size_t idx) const {
        std::array<int, 3> i{0, 0, 0};
        for (int a = n - 1; a >= 0; --a) {
            i[a] = static_cast<int>(idx % m);
            idx /= m;
        }
        return i;
    }

    /// Physical coordinate of a point index along one axis.
    double coord(int i) const { return static_cast<double>(i) / m; }

    bool operator==(const Grid& o) const {
        return n == o.n && m == o.m && dealias_fraction == o.dealias_fraction;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

} // namespace ersim
