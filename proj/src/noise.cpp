#include "ersim/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "ersim/rng.hpp"

namespace ersim {

NoiseModel NoiseModel::power_law(NoiseFamily family, int K, double a, double gamma, double L) {
    NoiseModel m;
    m.family = family;
    m.K = K;
    m.L = L;
    m.c.resize(K);
    for (int k = 1; k <= K; ++k) m.c[k - 1] = a * std::pow(double(k), -gamma);
    // report the truncated tail of the infinite series
    double tail = 0.0;
    for (int k = K + 1; k <= K + 100000; ++k) {
        double t = a * std::pow(double(k), -gamma);
        tail += t * t;
        if (t * t < 1e-18 * (1.0 + tail)) break;
    }
    m.tail_weight = tail;
    m.validate();
    return m;
}

NoiseModel NoiseModel::explicit_coeffs(NoiseFamily family, std::vector<double> c, double L) {
    NoiseModel m;
    m.family = family;
    m.K = static_cast<int>(c.size());
    m.c = std::move(c);
    m.L = L;
    m.validate();
    return m;
}

double NoiseModel::coeff_sum_sq() const {
    double s = 0.0;
    for (double x : c) s += x * x;
    return s;
}

void NoiseModel::validate() const {
    if (K <= 0) throw std::invalid_argument("NoiseModel: K must be positive");
    if (static_cast<int>(c.size()) != K)
        throw std::invalid_argument("NoiseModel: coefficient count must equal K");
    if (coeff_sum_sq() > L * (1.0 + 1e-12))
        throw std::invalid_argument("NoiseModel: sum of c_k^2 exceeds the growth constant L");
}

std::vector<double> WienerPath::value_at(int j) const {
    std::vector<double> b(K, 0.0);
    for (int k = 0; k < K; ++k)
        for (int s = 0; s < j; ++s) b[k] += dB(k, s);
    return b;
}

WienerPath wiener_increments(int K, double dt, int steps, std::uint64_t seed,
                             std::uint64_t path_index) {
    if (!(dt > 0.0)) throw std::invalid_argument("wiener_increments: dt must be positive");
    if (steps < 0) throw std::invalid_argument("wiener_increments: negative step count");
    WienerPath p;
    p.K = K;
    p.dt = dt;
    p.steps = steps;
    p.seed = seed;
    p.path_index = path_index;
    p.increments.resize(static_cast<std::size_t>(K) * steps);
    const double sd = std::sqrt(dt);
    for (int k = 0; k < K; ++k)
        for (int j = 0; j < steps; ++j)
            p.increments[static_cast<std::size_t>(k) * steps + j] =
                sd * rng::normal(seed, rng::Stream::Wiener, path_index, k, j);
    return p;
}

namespace {

VectorField constant_field(const Grid& g, const std::array<double, 3>& u, double c) {
    VectorField f(g);
    for (int a = 0; a < g.n; ++a)
        f.comp(a) = ScalarField::physical(g, std::vector<double>(g.size(), c * u[a]));
    return f;
}

std::array<double, 3> axis_unit(int k, int n) {
    std::array<double, 3> u{0.0, 0.0, 0.0};
    u[k % n] = 1.0;
    return u;
}

} // namespace

std::vector<VectorField> apply_phi(const VectorField& v, const NoiseModel& model,
                                   const GalerkinBasis* basis) {
    const Grid& g = v.grid();
    std::vector<VectorField> out;
    out.reserve(model.K);

    switch (model.family) {
    case NoiseFamily::Additive: {
        for (int k = 0; k < model.K; ++k)
            out.push_back(constant_field(g, axis_unit(k, g.n), model.c[k]));
        return out;
    }
    case NoiseFamily::ModeAdditive: {
        if (basis == nullptr)
            throw std::invalid_argument("apply_phi: ModeAdditive requires a basis");
        if (model.K > basis->size())
            throw std::invalid_argument("apply_phi: ModeAdditive needs K <= basis size");
        std::vector<double> e(basis->size(), 0.0);
        for (int k = 0; k < model.K; ++k) {
            e.assign(basis->size(), 0.0);
            e[k] = model.c[k];
            out.push_back(basis->synthesize_field(e));
        }
        return out;
    }
    case NoiseFamily::LinearMultiplicative: {
        VectorField vp = v;
        vp.require_physical();
        for (int k = 0; k < model.K; ++k) {
            VectorField f(g);
            for (int a = 0; a < g.n; ++a) {
                std::vector<double> vals = vp.comp(a).phys();
                for (auto& x : vals) x *= model.c[k];
                f.comp(a) = ScalarField::physical(g, std::move(vals));
            }
            out.push_back(std::move(f));
        }
        return out;
    }
    case NoiseFamily::BoundedGradient: {
        VectorField vp = v;
        vp.require_physical();
        for (int k = 0; k < model.K; ++k) {
            VectorField f(g);
            for (int a = 0; a < g.n; ++a) {
                std::vector<double> vals = vp.comp(a).phys();
                for (auto& x : vals) x = model.c[k] * std::tanh(x);
                f.comp(a) = ScalarField::physical(g, std::move(vals));
            }
            out.push_back(std::move(f));
        }
        return out;
    }
    }
    throw std::invalid_argument("apply_phi: unknown noise family");
}

double u0_norm(std::span<const double> alpha) {
    double acc = 0.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        double kk = static_cast<double>(k + 1);
        acc += alpha[k] * alpha[k] / (kk * kk);
    }
    return acc;
}

GrowthCheck check_growth(const NoiseModel& model, int n, int samples, std::uint64_t seed) {
    GrowthCheck r;
    const double csum = model.coeff_sum_sq();
    for (int s = 0; s < samples; ++s) {
        std::array<double, 3> xi{0.0, 0.0, 0.0};
        double xi2 = 0.0;
        for (int a = 0; a < n; ++a) {
            xi[a] = 10.0 * rng::normal(seed, rng::Stream::TestFunctions, s, a, 0);
            xi2 += xi[a] * xi[a];
        }
        double val = 0.0, grad = 0.0;
        switch (model.family) {
        case NoiseFamily::Additive:
        case NoiseFamily::ModeAdditive:
            val = csum;
            grad = 0.0;
            break;
        case NoiseFamily::LinearMultiplicative:
            val = csum * xi2;
            grad = csum * n;
            break;
        case NoiseFamily::BoundedGradient: {
            double t2 = 0.0, d2 = 0.0;
            for (int a = 0; a < n; ++a) {
                double th = std::tanh(xi[a]);
                double sech2 = 1.0 - th * th;
                t2 += th * th;
                d2 += sech2 * sech2;
            }
            val = csum * t2;
            grad = csum * d2;
            break;
        }
        }
        r.value_ratio = std::max(r.value_ratio, val / (model.L * (1.0 + xi2)));
        r.gradient_ratio = std::max(r.gradient_ratio, grad / model.L);
    }
    r.ok = r.value_ratio <= 1.0 + 1e-12 && r.gradient_ratio <= 1.0 + 1e-12;
    return r;
}

} // namespace ersim
