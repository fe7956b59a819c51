#include "ersim/spectral_ops.hpp"

#include <cmath>
#include <numbers>

namespace ersim {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<std::complex<double>> spectrum_of(const ScalarField& s) {
    if (s.has_spectral()) return s.spec();
    return fft::forward_real(s.grid(), s.phys());
}

std::vector<std::vector<std::complex<double>>> spectrum_of(const VectorField& v) {
    std::vector<std::vector<std::complex<double>>> spec;
    spec.reserve(v.dim());
    for (int i = 0; i < v.dim(); ++i) spec.push_back(spectrum_of(v.comp(i)));
    return spec;
}

// Wavenumbers along each axis, with Nyquist marked for zeroing.
struct FreqTable {
    std::vector<int> k;
    explicit FreqTable(const Grid& g) : k(g.m) {
        for (int j = 0; j < g.m; ++j) k[j] = g.freq(j);
    }
};

bool has_nyquist(const Grid& g, const std::array<int, 3>& kv) {
    for (int a = 0; a < g.n; ++a)
        if (kv[a] == g.m / 2) return true;
    return false;
}

template <typename F>
void for_each_mode(const Grid& g, F&& body) {
    FreqTable ft(g);
    const std::size_t total = g.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        auto pt = g.decode(idx);
        std::array<int, 3> kv{0, 0, 0};
        for (int a = 0; a < g.n; ++a) kv[a] = ft.k[pt[a]];
        body(idx, kv);
    }
}

} // namespace

ScalarField fft_forward(const ScalarField& s) {
    if (s.has_spectral()) return s;
    ScalarField out = ScalarField::spectral(s.grid(), fft::forward_real(s.grid(), s.phys()));
    return out;
}

VectorField fft_forward(const VectorField& v) {
    VectorField out(v.grid());
    for (int i = 0; i < v.dim(); ++i) out.comp(i) = fft_forward(v.comp(i));
    return out;
}

ScalarField fft_inverse(const ScalarField& s) {
    if (s.has_physical()) return s;
    return ScalarField::physical(s.grid(), fft::inverse_to_real(s.grid(), s.spec()));
}

VectorField fft_inverse(const VectorField& v) {
    VectorField out(v.grid());
    for (int i = 0; i < v.dim(); ++i) out.comp(i) = fft_inverse(v.comp(i));
    return out;
}

TensorField gradient(const VectorField& v) {
    const Grid& g = v.grid();
    auto spec = spectrum_of(v);
    TensorField out(g);
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            std::vector<std::complex<double>> d(g.size());
            for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
                if (has_nyquist(g, kv)) { d[idx] = 0.0; return; }
                d[idx] = std::complex<double>(0.0, two_pi * kv[i]) * spec[j][idx];
            });
            auto f = ScalarField::spectral(g, std::move(d));
            f.require_physical();
            out.entry(i, j) = std::move(f);
        }
    }
    return out;
}

VectorField gradient(const ScalarField& s) {
    const Grid& g = s.grid();
    auto spec = spectrum_of(s);
    VectorField out(g);
    for (int i = 0; i < g.n; ++i) {
        std::vector<std::complex<double>> d(g.size());
        for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
            if (has_nyquist(g, kv)) { d[idx] = 0.0; return; }
            d[idx] = std::complex<double>(0.0, two_pi * kv[i]) * spec[idx];
        });
        auto f = ScalarField::spectral(g, std::move(d));
        f.require_physical();
        out.comp(i) = std::move(f);
    }
    return out;
}

ScalarField divergence(const VectorField& v) {
    const Grid& g = v.grid();
    auto spec = spectrum_of(v);
    std::vector<std::complex<double>> d(g.size());
    for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
        if (has_nyquist(g, kv)) { d[idx] = 0.0; return; }
        std::complex<double> acc = 0.0;
        for (int i = 0; i < g.n; ++i)
            acc += std::complex<double>(0.0, two_pi * kv[i]) * spec[i][idx];
        d[idx] = acc;
    });
    auto f = ScalarField::spectral(g, std::move(d));
    f.require_physical();
    return f;
}

VectorField divergence(const TensorField& t) {
    const Grid& g = t.grid();
    std::vector<std::vector<std::complex<double>>> spec(g.n * g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) spec[i * g.n + j] = spectrum_of(t.entry(i, j));
    VectorField out(g);
    for (int j = 0; j < g.n; ++j) {
        std::vector<std::complex<double>> d(g.size());
        for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
            if (has_nyquist(g, kv)) { d[idx] = 0.0; return; }
            std::complex<double> acc = 0.0;
            for (int i = 0; i < g.n; ++i)
                acc += std::complex<double>(0.0, two_pi * kv[i]) * spec[i * g.n + j][idx];
            d[idx] = acc;
        });
        auto f = ScalarField::spectral(g, std::move(d));
        f.require_physical();
        out.comp(j) = std::move(f);
    }
    return out;
}

TensorField sym_gradient(const VectorField& v) {
    TensorField grad = gradient(v);
    const Grid& g = v.grid();
    TensorField out(g, /*symmetric=*/true);
    for (int i = 0; i < g.n; ++i) {
        for (int j = i; j < g.n; ++j) {
            std::vector<double> vals(g.size());
            const auto& a = grad.entry(i, j).phys();
            const auto& b = grad.entry(j, i).phys();
            for (std::size_t idx = 0; idx < g.size(); ++idx)
                vals[idx] = 0.5 * (a[idx] + b[idx]);
            auto f = ScalarField::physical(g, std::move(vals));
            out.entry(i, j) = f;
            if (j != i) out.entry(j, i) = f;   // shared values: symmetric bitwise
        }
    }
    return out;
}

VectorField leray_project(const VectorField& v) {
    const Grid& g = v.grid();
    auto spec = spectrum_of(v);
    std::vector<std::vector<std::complex<double>>> out(g.n,
        std::vector<std::complex<double>>(g.size()));
    for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
        double k2 = 0.0;
        for (int a = 0; a < g.n; ++a) k2 += static_cast<double>(kv[a]) * kv[a];
        if (k2 == 0.0) {
            for (int a = 0; a < g.n; ++a) out[a][idx] = spec[a][idx];
            return;
        }
        if (has_nyquist(g, kv)) {
            for (int a = 0; a < g.n; ++a) out[a][idx] = 0.0;
            return;
        }
        std::complex<double> kdotu = 0.0;
        for (int a = 0; a < g.n; ++a) kdotu += static_cast<double>(kv[a]) * spec[a][idx];
        for (int a = 0; a < g.n; ++a)
            out[a][idx] = spec[a][idx] - kdotu * static_cast<double>(kv[a]) / k2;
    });
    VectorField res(g);
    for (int a = 0; a < g.n; ++a)
        res.comp(a) = ScalarField::spectral(g, std::move(out[a]));
    return res;
}

ScalarField inv_laplacian(const ScalarField& s) {
    const Grid& g = s.grid();
    auto spec = spectrum_of(s);
    std::vector<std::complex<double>> out(g.size());
    for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
        double k2 = 0.0;
        for (int a = 0; a < g.n; ++a) k2 += static_cast<double>(kv[a]) * kv[a];
        if (k2 == 0.0 || has_nyquist(g, kv)) {
            out[idx] = 0.0;                     // zero-mean convention
            return;
        }
        out[idx] = spec[idx] / (-two_pi * two_pi * k2);
    });
    auto f = ScalarField::spectral(g, std::move(out));
    f.require_physical();
    return f;
}

ScalarField laplacian(const ScalarField& s) {
    const Grid& g = s.grid();
    auto spec = spectrum_of(s);
    std::vector<std::complex<double>> out(g.size());
    for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
        if (has_nyquist(g, kv)) { out[idx] = 0.0; return; }
        double k2 = 0.0;
        for (int a = 0; a < g.n; ++a) k2 += static_cast<double>(kv[a]) * kv[a];
        out[idx] = spec[idx] * (-two_pi * two_pi * k2);
    });
    auto f = ScalarField::spectral(g, std::move(out));
    f.require_physical();
    return f;
}

void dealias_inplace(std::vector<std::complex<double>>& spec, const Grid& g) {
    const int cut = g.dealias_cutoff();
    for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& kv) {
        for (int a = 0; a < g.n; ++a) {
            if (std::abs(kv[a]) > cut || kv[a] == g.m / 2) {
                spec[idx] = 0.0;
                return;
            }
        }
    });
}

VectorField dealias(const VectorField& v) {
    const Grid& g = v.grid();
    VectorField out(g);
    for (int i = 0; i < g.n; ++i) {
        auto spec = spectrum_of(v.comp(i));
        dealias_inplace(spec, g);
        out.comp(i) = ScalarField::spectral(g, std::move(spec));
    }
    return out;
}

double integral(const ScalarField& s) {
    const auto& v = s.has_physical()
        ? s.phys()
        : fft::inverse_to_real(s.grid(), s.spec());
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(s.grid().size());
}

double l2_norm_sq(const ScalarField& s) {
    const auto& v = s.has_physical()
        ? s.phys()
        : fft::inverse_to_real(s.grid(), s.spec());
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc / static_cast<double>(s.grid().size());
}

double l2_norm_sq(const VectorField& v) {
    double acc = 0.0;
    for (int i = 0; i < v.dim(); ++i) acc += l2_norm_sq(v.comp(i));
    return acc;
}

double l2_norm_sq(const TensorField& t) {
    double acc = 0.0;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) acc += l2_norm_sq(t.entry(i, j));
    return acc;
}

double lp_norm(const ScalarField& s, double p) {
    const auto& v = s.has_physical()
        ? s.phys()
        : fft::inverse_to_real(s.grid(), s.spec());
    double acc = 0.0;
    for (double x : v) acc += std::pow(std::abs(x), p);
    return std::pow(acc / static_cast<double>(s.grid().size()), 1.0 / p);
}

double l2_inner(const VectorField& a, const VectorField& b) {
    if (a.grid() != b.grid()) throw std::invalid_argument("l2_inner: grid mismatch");
    double acc = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        const auto& x = a.comp(i).has_physical()
            ? a.comp(i).phys() : fft::inverse_to_real(a.grid(), a.comp(i).spec());
        const auto& y = b.comp(i).has_physical()
            ? b.comp(i).phys() : fft::inverse_to_real(b.grid(), b.comp(i).spec());
        for (std::size_t idx = 0; idx < a.grid().size(); ++idx) acc += x[idx] * y[idx];
    }
    return acc / static_cast<double>(a.grid().size());
}

ScalarField tensor_magnitude(const TensorField& t) {
    const Grid& g = t.grid();
    std::vector<double> vals(g.size(), 0.0);
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            const auto& c = t.entry(i, j).phys();
            for (std::size_t idx = 0; idx < g.size(); ++idx) vals[idx] += c[idx] * c[idx];
        }
    }
    for (auto& x : vals) x = std::sqrt(x);
    return ScalarField::physical(g, std::move(vals));
}

} // namespace ersim
