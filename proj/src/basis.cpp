#include "ersim/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ersim {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

std::array<double, 3> normalized(std::array<double, 3> v) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& x : v) x /= n;
    return v;
}

// Polarisation vectors orthogonal to k: one for n = 2, two for n = 3.
std::vector<std::array<double, 3>> polarisations(const Grid& g, const std::array<int, 3>& k) {
    if (g.n == 2) {
        double norm = std::sqrt(static_cast<double>(k[0]) * k[0] + static_cast<double>(k[1]) * k[1]);
        return {{-k[1] / norm, k[0] / norm, 0.0}};
    }
    std::array<double, 3> kd = {double(k[0]), double(k[1]), double(k[2])};
    int axis = 0;
    for (int a = 1; a < 3; ++a)
        if (std::abs(k[a]) < std::abs(k[axis])) axis = a;
    std::array<double, 3> e{0.0, 0.0, 0.0};
    e[axis] = 1.0;
    auto d1 = normalized(cross(kd, e));
    auto d2 = normalized(cross(kd, d1));
    return {d1, d2};
}

// Half-lattice convention: keep k whose first nonzero component is positive.
bool in_half_lattice(const Grid& g, const std::array<int, 3>& k) {
    for (int a = 0; a < g.n; ++a) {
        if (k[a] > 0) return true;
        if (k[a] < 0) return false;
    }
    return false;   // k = 0 handled separately
}

} // namespace

std::vector<BasisMode> GalerkinBasis::enumerate(const Grid& g, int max_k_sq) {
    std::vector<BasisMode> modes;
    for (int a = 0; a < g.n; ++a) {
        BasisMode m;
        m.kind = BasisMode::Kind::Constant;
        m.d[a] = 1.0;
        m.lambda = 1.0;
        modes.push_back(m);
    }

    const int kmax = static_cast<int>(std::floor(std::sqrt(double(max_k_sq))));
    std::vector<std::array<int, 3>> half;
    std::array<int, 3> k{0, 0, 0};
    const int lo = -kmax, hi = kmax;
    for (k[0] = lo; k[0] <= hi; ++k[0]) {
        for (k[1] = lo; k[1] <= hi; ++k[1]) {
            if (g.n == 2) {
                k[2] = 0;
                if (k[0] * k[0] + k[1] * k[1] == 0) continue;
                if (k[0] * k[0] + k[1] * k[1] > max_k_sq) continue;
                if (in_half_lattice(g, k)) half.push_back(k);
            } else {
                for (k[2] = lo; k[2] <= hi; ++k[2]) {
                    int ksq = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
                    if (ksq == 0 || ksq > max_k_sq) continue;
                    if (in_half_lattice(g, k)) half.push_back(k);
                }
            }
        }
    }
    std::sort(half.begin(), half.end(), [](const auto& a, const auto& b) {
        int sa = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
        int sb = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
        if (sa != sb) return sa < sb;
        return a < b;
    });

    for (const auto& kv : half) {
        int ksq = kv[0] * kv[0] + kv[1] * kv[1] + kv[2] * kv[2];
        for (const auto& d : polarisations(g, kv)) {
            for (auto kind : {BasisMode::Kind::Cos, BasisMode::Kind::Sin}) {
                BasisMode m;
                m.kind = kind;
                m.k = kv;
                m.d = d;
                m.k_sq = ksq;
                m.lambda = 1.0 + two_pi * two_pi * ksq;
                modes.push_back(m);
            }
        }
    }
    return modes;
}

GalerkinBasis GalerkinBasis::first_n(const Grid& g, int N) {
    GalerkinBasis b;
    b.grid_ = g;
    // enumerate enough shells, then truncate
    int max_k_sq = 1;
    auto modes = enumerate(g, max_k_sq);
    const int limit = g.dealias_cutoff();
    while (static_cast<int>(modes.size()) < N) {
        max_k_sq += 1;
        if (max_k_sq > 3 * limit * limit)
            throw std::invalid_argument("GalerkinBasis: N too large for grid resolution");
        modes = enumerate(g, max_k_sq);
    }
    modes.resize(N);
    b.modes_ = std::move(modes);
    for (const auto& m : b.modes_)
        for (int a = 0; a < g.n; ++a)
            b.max_axis_k_ = std::max(b.max_axis_k_, std::abs(m.k[a]));
    if (b.max_axis_k_ > limit)
        throw std::invalid_argument("GalerkinBasis: requested modes exceed the dealias band");
    return b;
}

GalerkinBasis GalerkinBasis::covering(const Grid& g, int kmax) {
    GalerkinBasis b;
    b.grid_ = g;
    b.modes_ = enumerate(g, kmax * kmax);
    for (const auto& m : b.modes_)
        for (int a = 0; a < g.n; ++a)
            b.max_axis_k_ = std::max(b.max_axis_k_, std::abs(m.k[a]));
    if (b.max_axis_k_ > g.dealias_cutoff())
        throw std::invalid_argument("GalerkinBasis: requested modes exceed the dealias band");
    return b;
}

int modes_covering(const Grid& g, int kmax) {
    return GalerkinBasis::covering(g, kmax).size();
}

void GalerkinBasis::synthesize(std::span<const double> C,
                               std::vector<std::vector<std::complex<double>>>& spec) const {
    const Grid& g = grid_;
    if (static_cast<int>(C.size()) != size())
        throw std::invalid_argument("GalerkinBasis: coefficient count mismatch");
    spec.resize(g.n);
    for (auto& s : spec) {
        s.assign(g.size(), std::complex<double>(0.0, 0.0));
    }
    const double half_r2 = std::numbers::sqrt2 / 2.0;

    auto bin = [&](int kk) { return kk >= 0 ? kk : kk + g.m; };

    for (int i = 0; i < size(); ++i) {
        const BasisMode& m = modes_[i];
        const double c = C[i];
        if (c == 0.0) continue;
        if (m.kind == BasisMode::Kind::Constant) {
            for (int a = 0; a < g.n; ++a)
                if (m.d[a] != 0.0) spec[a][0] += c * m.d[a];
            continue;
        }
        std::array<int, 3> ip{0, 0, 0}, im{0, 0, 0};
        for (int a = 0; a < g.n; ++a) {
            ip[a] = bin(m.k[a]);
            im[a] = bin(-m.k[a]);
        }
        const std::size_t idx_p = g.index(ip), idx_m = g.index(im);
        std::complex<double> wp, wm;
        if (m.kind == BasisMode::Kind::Cos) {
            wp = wm = std::complex<double>(c * half_r2, 0.0);
        } else {
            wp = std::complex<double>(0.0, -c * half_r2);
            wm = std::complex<double>(0.0, c * half_r2);
        }
        for (int a = 0; a < g.n; ++a) {
            if (m.d[a] == 0.0) continue;
            spec[a][idx_p] += wp * m.d[a];
            spec[a][idx_m] += wm * m.d[a];
        }
    }
}

VectorField GalerkinBasis::synthesize_field(std::span<const double> C) const {
    std::vector<std::vector<std::complex<double>>> spec;
    synthesize(C, spec);
    VectorField v(grid_);
    for (int a = 0; a < grid_.n; ++a) {
        auto f = ScalarField::spectral(grid_, std::move(spec[a]));
        f.require_physical();
        v.comp(a) = std::move(f);
    }
    return v;
}

std::vector<double> GalerkinBasis::project_spectra(
    const std::vector<std::vector<std::complex<double>>>& spec) const {
    const Grid& g = grid_;
    std::vector<double> C(size(), 0.0);
    const double r2 = std::numbers::sqrt2;
    auto bin = [&](int kk) { return kk >= 0 ? kk : kk + g.m; };

    for (int i = 0; i < size(); ++i) {
        const BasisMode& m = modes_[i];
        if (m.kind == BasisMode::Kind::Constant) {
            for (int a = 0; a < g.n; ++a)
                if (m.d[a] != 0.0) C[i] += m.d[a] * spec[a][0].real();
            continue;
        }
        std::array<int, 3> ip{0, 0, 0};
        for (int a = 0; a < g.n; ++a) ip[a] = bin(m.k[a]);
        const std::size_t idx = g.index(ip);
        double acc = 0.0;
        for (int a = 0; a < g.n; ++a) {
            if (m.d[a] == 0.0) continue;
            acc += m.kind == BasisMode::Kind::Cos
                       ? m.d[a] * spec[a][idx].real()
                       : -m.d[a] * spec[a][idx].imag();
        }
        C[i] = r2 * acc;
    }
    return C;
}

std::vector<double> GalerkinBasis::project(const VectorField& v) const {
    std::vector<std::vector<std::complex<double>>> spec(grid_.n);
    for (int a = 0; a < grid_.n; ++a) {
        const auto& c = v.comp(a);
        spec[a] = c.has_spectral() ? c.spec() : fft::forward_real(grid_, c.phys());
    }
    return project_spectra(spec);
}

std::vector<double> GalerkinBasis::gram_matrix() const {
    const int N = size();
    std::vector<double> gram(N * N, 0.0);
    for (int i = 0; i < N; ++i) {
        std::vector<double> e(N, 0.0);
        e[i] = 1.0;
        VectorField wi = synthesize_field(e);
        auto col = project(wi);
        for (int j = 0; j < N; ++j) gram[j * N + i] = col[j];
    }
    return gram;
}

} // namespace ersim
