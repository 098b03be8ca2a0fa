#pragma once

#include <complex>
#include <vector>

#include "coulscat/phase_shifts.hpp"

namespace coulscat {

/// Wavepacket regularization and summation controls for the partial-wave
/// cross section.
struct XSecConfig {
    double epsilon = 1e-3;         // momentum spread sigma_p / p
    double delta_shift = 0.0;      // dimensionless time-shift parameter
    int l_max = -1;                // -1: ceil(7/epsilon)
    bool symmetrize = false;       // boson exchange factor 1 + (-1)^l
    double r_over_sigma_x = -1.0;  // initial separation R over sigma_x; -1: sqrt(epsilon)
    int order = 2;                 // 1 drops the second-order phases

    int resolved_l_max() const;
    double resolved_r_over_sigma_x() const;
    void validate() const;
};

/// Per-l centre Delta_l = 4 eps eta (ln(4pR/e) - psi(l+1)) of the Gaussian
/// delta profile.  With sigma_x sigma_p = 1/2 the log argument reduces to
/// 2 (R/sigma_x) / eps / e independently of p.
double delta_l_shift(int l, const Kinematics& kin, const XSecConfig& cfg);

/// Partial-wave amplitude (MeV^-1)
///   f(theta) = (1/2p) sum_l (2l+1) S_l e^{-eps^2 (l+1/2)^2}
///              e^{2i(delta1_bar + delta2)} e^{-(delta - Delta_l)^2 / 4} P_l(cos theta),
/// S_l = 1, or 1 + (-1)^l when symmetrized.
std::complex<double> scattering_amplitude(double theta, const PhaseShiftTable& table,
                                          const XSecConfig& cfg);

/// |f(theta)|^2 in MeV^-2.
double differential_cross_section(double theta, const PhaseShiftTable& table,
                                  const XSecConfig& cfg);

/// Rutherford reference m^2 alpha^2 / (4 p^4 sin^4(theta/2)); diverges at
/// theta = 0 and is rejected there.
double rutherford(double p, double theta, const Kinematics& kin);

/// Spin-averaged tree-level e-e reference cross section; diverges at both
/// theta = 0 and pi.
double moller(double p, double theta, const Kinematics& kin);

/// One sweep point: the model value next to both reference formulas.
struct XSecRecord {
    double p = 0.0;
    double theta = 0.0;
    double model = 0.0;
    double rutherford = 0.0;
    double moller = 0.0;
    double delta_shift_used = 0.0;
};

XSecRecord make_xsec_record(double theta, const PhaseShiftTable& table, const XSecConfig& cfg);

struct DeltaProfile {
    std::vector<double> delta;
    std::vector<double> dsigma;
    double delta_star = 0.0;  // grid argmax of dsigma
};

/// Cross section scanned over the time-shift parameter delta.
DeltaProfile delta_profile(double theta, const PhaseShiftTable& table,
                           const XSecConfig& cfg, const std::vector<double>& delta_grid);

}  // namespace coulscat
