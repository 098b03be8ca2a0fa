#pragma once

namespace coulscat {

inline constexpr double kElectronMassMeV = 0.51099895;
inline constexpr double kFineStructureConstant = 7.2973525693e-3;

/// (hbar c)^2 = 0.3893793721 GeV^2 mbarn.  A cross section in MeV^-2 times
/// 1e6 * this constant is in millibarn.
inline constexpr double kHbarC2GeV2Millibarn = 0.3893793721;

/// Equal-mass two-body CM kinematics at single-particle momentum p (MeV),
/// in natural units.  Immutable.
class Kinematics {
public:
    explicit Kinematics(double p_mev, double mass_mev = kElectronMassMeV,
                        double alpha = kFineStructureConstant);

    double p() const { return p_; }
    double mass() const { return mass_; }
    double alpha() const { return alpha_; }

    /// Total CM energy E(p) = 2 sqrt(p^2 + m^2).
    double energy() const { return energy_; }

    /// Velocity of either particle, p / sqrt(p^2 + m^2).
    double beta() const { return beta_; }

    /// Coupling parameter alpha / (2 beta).  Undefined at p = 0.
    double eta() const;

    /// E(k) = 2 sqrt(k^2 + m^2) for any momentum magnitude k >= 0.
    double energy_total(double k) const;

private:
    double p_;
    double mass_;
    double alpha_;
    double energy_;
    double beta_;
};

Kinematics make_kinematics(double p_mev, double mass_mev = kElectronMassMeV,
                           double alpha = kFineStructureConstant);

}  // namespace coulscat
