#include "ersim/lpx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ersim {

namespace {

void check_compatible(const SpaceTimeScalar& f, const ExponentField& p) {
    if (f.grid != p.grid())
        throw std::invalid_argument("lpx: field and exponent grids differ");
    if (f.slices.empty())
        throw std::invalid_argument("lpx: empty sample set");
    if (!p.time_constant() && p.slices() != static_cast<int>(f.slices.size()))
        throw std::invalid_argument("lpx: slice counts of field and exponent differ");
}

// trapezoidal weights in time; a single slice integrates over a degenerate
// cylinder of measure zero unless dt carries the interval
double time_weight(const SpaceTimeScalar& f, int j) {
    const int last = static_cast<int>(f.slices.size()) - 1;
    if (last == 0) return 0.0;
    return (j == 0 || j == last) ? 0.5 * f.dt : f.dt;
}

double modular_scaled(const SpaceTimeScalar& f, const ExponentField& p, double inv_k) {
    const double cell = 1.0 / static_cast<double>(f.grid.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < f.slices.size(); ++j) {
        const auto& slice = f.slices[j];
        const auto& pj = p.time_constant() ? p.slice(0) : p.slice(static_cast<int>(j));
        double sum = 0.0;
        for (std::size_t i = 0; i < slice.size(); ++i) {
            double x = std::abs(slice[i]) * inv_k;
            if (!std::isfinite(x)) throw std::invalid_argument("lpx: non-finite sample");
            sum += std::pow(x, pj[i]);
        }
        acc += time_weight(f, static_cast<int>(j)) * sum * cell;
    }
    return acc;
}

} // namespace

double modular(const SpaceTimeScalar& f, const ExponentField& p) {
    check_compatible(f, p);
    return modular_scaled(f, p, 1.0);
}

double classical_lq_norm(const SpaceTimeScalar& f, double q) {
    const double cell = 1.0 / static_cast<double>(f.grid.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < f.slices.size(); ++j) {
        double sum = 0.0;
        for (double x : f.slices[j]) sum += std::pow(std::abs(x), q);
        acc += time_weight(f, static_cast<int>(j)) * sum * cell;
    }
    return std::pow(acc, 1.0 / q);
}

double luxemburg_norm(const SpaceTimeScalar& f, const ExponentField& p) {
    check_compatible(f, p);

    double max_abs = 0.0;
    for (const auto& s : f.slices)
        for (double x : s) {
            if (!std::isfinite(x)) throw std::invalid_argument("lpx: non-finite sample");
            max_abs = std::max(max_abs, std::abs(x));
        }
    if (max_abs == 0.0) return 0.0;

    const double volume = std::max(f.T(), 1e-300);
    // classical-norm bracket, widened geometrically until it straddles 1
    double lo = classical_lq_norm(f, p.bounds().p_minus) / (1.0 + volume);
    double hi = classical_lq_norm(f, p.bounds().p_plus) * (1.0 + volume);
    lo = std::max(lo, 1e-300);
    hi = std::max(hi, 2.0 * lo);
    while (modular_scaled(f, p, 1.0 / lo) < 1.0 && lo > 1e-280) lo *= 0.5;
    while (modular_scaled(f, p, 1.0 / hi) > 1.0 && hi < 1e280) hi *= 2.0;

    const double tol = 1e-10;
    for (int iter = 0; iter < 200; ++iter) {
        double k = 0.5 * (lo + hi);
        double m = modular_scaled(f, p, 1.0 / k);
        if (std::abs(m - 1.0) <= tol) return k;
        (m > 1.0 ? lo : hi) = k;
        if ((hi - lo) <= 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

double energy_functional(const std::vector<double>& v_l2_sq,
                         const SpaceTimeScalar& eps_magnitude,
                         const ExponentField& p) {
    double sup = 0.0;
    for (double e : v_l2_sq) sup = std::max(sup, e);
    return sup + modular(eps_magnitude, p);
}

} // namespace ersim
