#pragma once

#include <cstdint>
#include <functional>

namespace coulscat {

/// Controls for the principal-value integrator.
struct PVQuadConfig {
    /// Half width of the symmetric pairing window around the pole.
    double window_half_width = 0.5;
    /// Smallest |x| ever sampled; the remaining sliver is bounded analytically.
    double inner_cutoff = 1e-10;
    /// Geometric ratio of the graded panels approaching the pole.
    double grading_ratio = 0.5;
    /// Truncation of an (effectively) infinite upper limit; the neglected
    /// tail is estimated from the local power-law decay.
    double outer_x_max = 1e4;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;

    void validate() const;  // throws std::domain_error on a bad configuration
};

struct PVResult {
    double value = 0.0;
    /// Quadrature error estimate, including the analytic bound on the
    /// unsampled sliver below inner_cutoff.
    double est_error = 0.0;
    std::int64_t evaluations = 0;
    /// Estimated remainder beyond outer_x_max when the domain was truncated.
    double tail_bound = 0.0;
};

/// Cauchy principal value of integral_{x_lo}^{x_hi} f(x) dx for f with a
/// simple pole at x = 0 (possibly dressed by integrable log factors).
///
/// Inside a window [-w, w] the integrand is folded to f(x) + f(-x) on a
/// geometrically graded grid in x > 0, which cancels the odd pole part
/// analytically; outside, ordinary adaptive Gauss-Kronrod panels are used.
/// x_hi may be +infinity, in which case the range is truncated at
/// cfg.outer_x_max and the remainder is reported in tail_bound.
///
/// Throws std::domain_error if 0 is not interior to [x_lo, x_hi] and
/// convergence_error if tolerances cannot be met within the budget.
PVResult principal_value(const std::function<double(double)>& f,
                         double x_lo, double x_hi,
                         const PVQuadConfig& cfg = {});

/// Both sides of the sinc/log resolvent identity
///   -(alpha/pi) Int dz sinc(z) (C_l - ln|z/pr|) = alpha (-ln(2 pr) + psi(l+1)),
/// the numeric side integrated over |z| <= z_max by half-period panels with
/// an averaged alternating tail.
struct SincLogPair {
    double numeric = 0.0;
    double analytic = 0.0;
};
SincLogPair sinc_log_identity(int l, double pr, double alpha, double z_max = 1e6);

}  // namespace coulscat
