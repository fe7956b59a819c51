#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ersim/field.hpp"

namespace ersim {

/// Bounds and Lipschitz budget of a random variable exponent field.
struct ExponentBounds {
    double p_minus = 2.0;
    double p_plus = 2.0;
    double c_p = 1.0;   ///< bound on the (spatial) Lipschitz constant of p
    int n = 2;

    void validate() const;
};

/// Solution-theory regimes with different admissibility windows on (p-, p+).
enum class Regime { Martingale, Strong, Pathwise };

struct AdmissibilityCheck {
    std::string name;
    std::string inequality;   ///< the inequality that was tested, human readable
    bool ok = false;
};

struct AdmissibilityReport {
    Regime regime = Regime::Martingale;
    bool admissible = false;
    std::vector<AdmissibilityCheck> checks;

    std::string violated() const;   ///< names of failed inequalities, comma joined
};

/// Window checks on the exponent bounds:
///   martingale  3n/(n+2) < p- <= p+ < (n+2)p-/n, relaxed to
///               p+ < n p- + 4 when p- >= 2;
///   strong      n=2: 1 < p- <= p+ < 4; n=3: 11/5 < p- <= p+ <= p- + 4/5;
///   pathwise    (n+2)/2 <= p- <= p+ < n p- + 4.
AdmissibilityReport check_admissibility(const ExponentBounds& b, Regime regime);

enum class ExponentModelKind { Constant, FrozenFourier, OuTime };

/// Sampler configuration. amplitude scales the underlying Gaussian field
/// before the sigmoid; cutoff is the band limit of that field; ou_tau is the
/// temporal correlation time of the OuTime model.
struct ExponentModel {
    ExponentModelKind kind = ExponentModelKind::Constant;
    double amplitude = 1.0;
    int cutoff = 2;
    double ou_tau = 0.1;
};

/// Uniform slice times t_j = j dt, j = 0..steps.
struct TimeGrid {
    double dt = 0.0;
    int steps = 0;
    double T() const { return dt * steps; }
};

/// A sampled realization of p(omega, t, x): slices on the spatial grid at the
/// solver step times, linear interpolation in between. Immutable once built.
class ExponentField {
public:
    ExponentField() = default;

    const Grid& grid() const { return grid_; }
    const ExponentBounds& bounds() const { return bounds_; }
    ExponentModelKind model() const { return kind_; }
    std::uint64_t seed() const { return seed_; }

    bool time_constant() const { return time_constant_; }
    int slices() const { return static_cast<int>(slices_.size()); }
    double slice_dt() const { return slice_dt_; }
    const std::vector<double>& slice(int j) const { return slices_.at(j); }

    /// Values at arbitrary time by linear interpolation between slices.
    std::vector<double> at_time(double t) const;

    /// Certified pointwise range and max discrete Lipschitz quotient.
    double observed_min() const { return observed_min_; }
    double observed_max() const { return observed_max_; }
    double max_lipschitz() const { return max_lipschitz_; }

    /// True when the sampled values satisfy the declared invariants.
    bool certify() const;

    static ExponentField constant(const Grid& g, const ExponentBounds& b, double value);

    friend ExponentField sample_exponent(const ExponentModel&, const ExponentBounds&,
                                         const Grid&, const TimeGrid&, std::uint64_t);

private:
    void finalize_certification();

    Grid grid_{2, 4};
    ExponentBounds bounds_;
    ExponentModelKind kind_ = ExponentModelKind::Constant;
    std::uint64_t seed_ = 0;
    bool time_constant_ = true;
    double slice_dt_ = 0.0;
    std::vector<std::vector<double>> slices_;
    double observed_min_ = 0.0, observed_max_ = 0.0, max_lipschitz_ = 0.0;
};

/// Draw an exponent field consistent with the bounds; deterministic per seed.
/// Throws when the request is infeasible (e.g. the Lipschitz budget cannot
/// support any non-constant field spanning a measurable part of [p-, p+]).
ExponentField sample_exponent(const ExponentModel& model, const ExponentBounds& bounds,
                              const Grid& grid, const TimeGrid& times, std::uint64_t seed);

/// Upper estimate of the log-Holder seminorm of 1/p: the max over sampled
/// space-time pairs of |1/p(X) - 1/p(Y)| log(e + 1/|X - Y|). Pair count is
/// capped by randomized subsampling.
double log_holder_modulus(const ExponentField& p, std::size_t max_pairs = 1000000,
                          std::uint64_t seed = 0);

} // namespace ersim
