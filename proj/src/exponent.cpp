#include "ersim/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ersim/rng.hpp"

namespace ersim {

void ExponentBounds::validate() const {
    if (!(1.0 < p_minus) || !(p_minus <= p_plus) || !std::isfinite(p_plus))
        throw std::invalid_argument("ExponentBounds: need 1 < p_minus <= p_plus < inf");
    if (c_p < 0.0) throw std::invalid_argument("ExponentBounds: c_p must be nonnegative");
    if (n != 2 && n != 3) throw std::invalid_argument("ExponentBounds: n must be 2 or 3");
}

std::string AdmissibilityReport::violated() const {
    std::string out;
    for (const auto& c : checks) {
        if (c.ok) continue;
        if (!out.empty()) out += ", ";
        out += c.name;
    }
    return out;
}

namespace {

AdmissibilityCheck make_check(const std::string& name, double lhs, const char* rel, double rhs) {
    AdmissibilityCheck c;
    c.name = name;
    bool ok = false;
    if (std::string(rel) == "<") ok = lhs < rhs;
    else if (std::string(rel) == "<=") ok = lhs <= rhs;
    std::ostringstream msg;
    msg << lhs << " " << rel << " " << rhs;
    c.inequality = name + ": " + msg.str();
    c.ok = ok;
    return c;
}

} // namespace

AdmissibilityReport check_admissibility(const ExponentBounds& b, Regime regime) {
    b.validate();
    AdmissibilityReport r;
    r.regime = regime;
    const double n = b.n;

    switch (regime) {
    case Regime::Martingale: {
        auto lower = make_check("lower", 3.0 * n / (n + 2.0), "<", b.p_minus);
        auto upper = make_check("upper", b.p_plus, "<", (n + 2.0) / n * b.p_minus);
        bool base = lower.ok && upper.ok;
        r.checks = {lower, upper};
        // relaxed window available once p- >= 2
        if (!base && b.p_minus >= 2.0) {
            auto relaxed = make_check("relaxed_upper", b.p_plus, "<", n * b.p_minus + 4.0);
            r.checks.push_back(relaxed);
            base = relaxed.ok;
        }
        r.admissible = base;
        break;
    }
    case Regime::Strong: {
        if (b.n == 2) {
            auto lower = make_check("lower", 1.0, "<", b.p_minus);
            auto upper = make_check("upper", b.p_plus, "<", 4.0);
            r.checks = {lower, upper};
            r.admissible = lower.ok && upper.ok;
        } else {
            auto lower = make_check("lower", 11.0 / 5.0, "<", b.p_minus);
            auto upper = make_check("upper", b.p_plus, "<=", b.p_minus + 4.0 / 5.0);
            r.checks = {lower, upper};
            r.admissible = lower.ok && upper.ok;
        }
        break;
    }
    case Regime::Pathwise: {
        auto lower = make_check("lower", (n + 2.0) / 2.0, "<=", b.p_minus);
        auto upper = make_check("upper", b.p_plus, "<", n * b.p_minus + 4.0);
        r.checks = {lower, upper};
        r.admissible = lower.ok && upper.ok;
        break;
    }
    }
    return r;
}

namespace {

// Max over grid points of the discrete gradient magnitude
// sqrt(sum_a ((p(x+h e_a) - p(x))/h)^2); certifies the Lipschitz constant.
double max_discrete_gradient(const Grid& g, const std::vector<double>& vals) {
    double worst = 0.0;
    const double inv_h = static_cast<double>(g.m);
    const std::size_t total = g.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        auto pt = g.decode(idx);
        double q2 = 0.0;
        for (int a = 0; a < g.n; ++a) {
            auto nb = pt;
            nb[a] = (nb[a] + 1) % g.m;
            double diff = (vals[g.index(nb)] - vals[idx]) * inv_h;
            q2 += diff * diff;
        }
        worst = std::max(worst, q2);
    }
    return std::sqrt(worst);
}

// Band-limited Gaussian field with decaying spectrum, deterministic per
// (seed, slice) through the counter-based generator.
std::vector<double> gaussian_band_field(const Grid& g, int cutoff, std::uint64_t seed,
                                        std::uint64_t slice_key) {
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> vals(g.size(), 0.0);
    int mode_counter = 0;
    std::array<int, 3> k{0, 0, 0};
    const int lo = -cutoff, hi = cutoff;
    auto add_mode = [&](const std::array<int, 3>& kv) {
        int ksq = 0;
        for (int a = 0; a < g.n; ++a) ksq += kv[a] * kv[a];
        if (ksq == 0 || ksq > cutoff * cutoff) return;
        // half lattice: first nonzero component positive
        for (int a = 0; a < g.n; ++a) {
            if (kv[a] > 0) break;
            if (kv[a] < 0) return;
        }
        ++mode_counter;
        const double decay = std::pow(1.0 + ksq, -1.5);
        const double ac = decay * rng::normal(seed, rng::Stream::Exponent, slice_key, mode_counter, 0);
        const double as = decay * rng::normal(seed, rng::Stream::Exponent, slice_key, mode_counter, 1);
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            auto pt = g.decode(idx);
            double phase = 0.0;
            for (int a = 0; a < g.n; ++a) phase += kv[a] * g.coord(pt[a]);
            vals[idx] += ac * std::cos(two_pi * phase) + as * std::sin(two_pi * phase);
        }
    };
    for (k[0] = lo; k[0] <= hi; ++k[0])
        for (k[1] = lo; k[1] <= hi; ++k[1]) {
            if (g.n == 2) { k[2] = 0; add_mode(k); }
            else for (k[2] = lo; k[2] <= hi; ++k[2]) add_mode(k);
        }
    return vals;
}

} // namespace

void ExponentField::finalize_certification() {
    observed_min_ = slices_[0][0];
    observed_max_ = slices_[0][0];
    max_lipschitz_ = 0.0;
    for (const auto& s : slices_) {
        for (double v : s) {
            observed_min_ = std::min(observed_min_, v);
            observed_max_ = std::max(observed_max_, v);
        }
        max_lipschitz_ = std::max(max_lipschitz_, max_discrete_gradient(grid_, s));
    }
}

bool ExponentField::certify() const {
    const double tol = 1e-12;
    return observed_min_ >= bounds_.p_minus - tol && observed_max_ <= bounds_.p_plus + tol &&
           max_lipschitz_ <= bounds_.c_p * (1.0 + 1e-12) + tol;
}

std::vector<double> ExponentField::at_time(double t) const {
    if (time_constant_ || slices_.size() == 1) return slices_.front();
    double s = t / slice_dt_;
    int j0 = static_cast<int>(std::floor(s));
    j0 = std::clamp(j0, 0, static_cast<int>(slices_.size()) - 1);
    int j1 = std::min(j0 + 1, static_cast<int>(slices_.size()) - 1);
    double w = std::clamp(s - j0, 0.0, 1.0);
    std::vector<double> out(slices_[j0].size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (1.0 - w) * slices_[j0][i] + w * slices_[j1][i];
    return out;
}

ExponentField ExponentField::constant(const Grid& g, const ExponentBounds& b, double value) {
    ExponentField f;
    f.grid_ = g;
    f.bounds_ = b;
    f.kind_ = ExponentModelKind::Constant;
    f.time_constant_ = true;
    f.slices_.push_back(std::vector<double>(g.size(), value));
    f.finalize_certification();
    return f;
}

ExponentField sample_exponent(const ExponentModel& model, const ExponentBounds& bounds,
                              const Grid& grid, const TimeGrid& times, std::uint64_t seed) {
    bounds.validate();
    const double mid = 0.5 * (bounds.p_minus + bounds.p_plus);
    const double amp = 0.5 * (bounds.p_plus - bounds.p_minus);

    ExponentField f;
    f.grid_ = grid;
    f.bounds_ = bounds;
    f.kind_ = model.kind;
    f.seed_ = seed;

    if (model.kind == ExponentModelKind::Constant || amp == 0.0 || model.amplitude == 0.0) {
        f.time_constant_ = true;
        f.slices_.push_back(std::vector<double>(grid.size(), mid));
        f.finalize_certification();
        return f;
    }

    // Feasibility: a non-constant field using any measurable part of the
    // range needs Lipschitz budget across the torus diameter sqrt(n)/2.
    const double diam = 0.5 * std::sqrt(double(grid.n));
    if (!(bounds.c_p > 0.0) || bounds.c_p * diam < 1e-6 * (bounds.p_plus - bounds.p_minus))
        throw std::invalid_argument(
            "sample_exponent: c_p too small for a non-constant field spanning the requested range");

    const int cutoff = std::min(model.cutoff, grid.dealias_cutoff());
    const int n_slices = model.kind == ExponentModelKind::FrozenFourier ? 1 : times.steps + 1;

    // underlying Gaussian field(s), OU-correlated across slices for OuTime
    std::vector<std::vector<double>> raw;
    raw.reserve(n_slices);
    raw.push_back(gaussian_band_field(grid, cutoff, seed, 0));
    if (n_slices > 1) {
        const double rho = std::exp(-times.dt / std::max(model.ou_tau, 1e-12));
        const double fresh = std::sqrt(1.0 - rho * rho);
        for (int j = 1; j < n_slices; ++j) {
            auto next = gaussian_band_field(grid, cutoff, seed, j);
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = rho * raw.back()[i] + fresh * next[i];
            raw.push_back(std::move(next));
        }
    }

    // smooth clamped sigmoid into (p-, p+)
    for (auto& s : raw)
        for (auto& x : s) x = mid + amp * std::tanh(model.amplitude * x);

    // rescale the deviation from the midpoint so the discrete Lipschitz
    // quotient stays within c_p
    double worst = 0.0;
    for (const auto& s : raw) worst = std::max(worst, max_discrete_gradient(grid, s));
    if (worst > bounds.c_p) {
        const double scale = bounds.c_p / worst;
        for (auto& s : raw)
            for (auto& x : s) x = mid + scale * (x - mid);
    }

    f.time_constant_ = n_slices == 1;
    f.slice_dt_ = times.dt;
    f.slices_ = std::move(raw);
    f.finalize_certification();
    return f;
}

double log_holder_modulus(const ExponentField& p, std::size_t max_pairs, std::uint64_t seed) {
    const Grid& g = p.grid();
    const int S = p.slices();
    const std::size_t points = g.size() * static_cast<std::size_t>(S);
    const std::size_t all_pairs = points * (points - 1) / 2;

    auto point_of = [&](std::size_t flat) {
        int slice = static_cast<int>(flat / g.size());
        std::size_t idx = flat % g.size();
        return std::pair<int, std::size_t>(slice, idx);
    };

    auto distance = [&](std::size_t fa, std::size_t fb) {
        auto [sa, ia] = point_of(fa);
        auto [sb, ib] = point_of(fb);
        double d2 = 0.0;
        double dt = (sa - sb) * (p.time_constant() ? 0.0 : p.slice_dt());
        d2 += dt * dt;
        auto pa = g.decode(ia), pb = g.decode(ib);
        for (int a = 0; a < g.n; ++a) {
            double dx = std::abs(g.coord(pa[a]) - g.coord(pb[a]));
            dx = std::min(dx, 1.0 - dx);   // periodic distance
            d2 += dx * dx;
        }
        return std::sqrt(d2);
    };

    auto value = [&](std::size_t flat) {
        auto [s, i] = point_of(flat);
        return p.slice(s)[i];
    };

    double worst = 0.0;
    auto consider = [&](std::size_t fa, std::size_t fb) {
        if (fa == fb) return;
        double d = distance(fa, fb);
        if (d == 0.0) return;
        double q = std::abs(1.0 / value(fa) - 1.0 / value(fb)) * std::log(std::exp(1.0) + 1.0 / d);
        worst = std::max(worst, q);
    };

    if (all_pairs <= max_pairs) {
        for (std::size_t a = 0; a < points; ++a)
            for (std::size_t b = a + 1; b < points; ++b) consider(a, b);
    } else {
        for (std::size_t s = 0; s < max_pairs; ++s) {
            auto u = rng::uniform2(seed, rng::Stream::Subsample, s, 0, 0);
            auto a = static_cast<std::size_t>(u[0] * points);
            auto b = static_cast<std::size_t>(u[1] * points);
            consider(std::min(a, points - 1), std::min(b, points - 1));
        }
    }
    return worst;
}

} // namespace ersim
