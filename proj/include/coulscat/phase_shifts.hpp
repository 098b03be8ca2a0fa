#pragma once

#include <utility>
#include <vector>

#include "coulscat/kinematics.hpp"
#include "coulscat/pv_quadrature.hpp"

namespace coulscat {

/// How delta2 is continued above the largest l it was computed for.
enum class Delta2Extension {
    kHold,            // repeat the last computed value (default)
    kZero,            // zero above l_max_delta2
    kLogExtrapolate,  // linear in ln(l+1) through the last two computed values
};

struct PhaseShiftEntry {
    int l = 0;
    double delta1_bar = 0.0;  // first order with the r-dependent log removed
    double delta2 = 0.0;      // second order
    PVResult delta2_quad;     // quadrature diagnostics; zeroed on extended rows
};

struct PhaseShiftTable {
    Kinematics kin;
    std::vector<PhaseShiftEntry> entries;  // contiguous l = 0..l_max
    int l_max_delta2 = 0;
    Delta2Extension extension_policy = Delta2Extension::kHold;

    int l_max() const { return static_cast<int>(entries.size()) - 1; }
};

/// First-order log-stripped phase shift eta * psi(l+1).
double delta1_bar(int l, const Kinematics& kin);

/// Kinematic weight 2 beta (E(p(1+x)) + E(p)) / (4 p (2+x)); equals 1 at
/// x = 0 and is smooth on x > -1.
double g_factor(double p, double x, const Kinematics& kin);

/// Second-order phase shift
///   (1/2) (pi/(2 beta)^2) PV int_{-1}^{inf} dx V_l(p(1+x), p)^2 g(p,x) / x,
/// returned with the principal-value diagnostics scaled to the same units.
std::pair<double, PVResult> delta2(int l, const Kinematics& kin,
                                   const PVQuadConfig& qcfg = {});

/// Phase-shift table with delta1_bar for l <= l_max and delta2 computed for
/// l <= l_max_delta2 (in parallel), then extended by `policy`.  Throws on
/// any failure; never returns a partial table.
PhaseShiftTable build_table(const Kinematics& kin, int l_max, int l_max_delta2,
                            const PVQuadConfig& qcfg = {},
                            Delta2Extension policy = Delta2Extension::kHold);

}  // namespace coulscat
