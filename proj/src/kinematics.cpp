#include "coulscat/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coulscat {

Kinematics::Kinematics(double p_mev, double mass_mev, double alpha)
    : p_(p_mev), mass_(mass_mev), alpha_(alpha)
{
    if (!(p_mev >= 0.0) || !std::isfinite(p_mev))
        throw std::domain_error("Kinematics: require p >= 0, got " + std::to_string(p_mev));
    if (!(mass_mev > 0.0) || !std::isfinite(mass_mev))
        throw std::domain_error("Kinematics: require mass > 0, got " + std::to_string(mass_mev));
    // alpha = 0 is admitted so the free limit can be exercised end to end.
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::domain_error("Kinematics: require alpha >= 0, got " + std::to_string(alpha));
    const double w = std::sqrt(p_ * p_ + mass_ * mass_);
    energy_ = 2.0 * w;
    beta_ = p_ / w;
}

double Kinematics::eta() const
{
    if (p_ == 0.0)
        throw std::domain_error("Kinematics::eta: undefined at p = 0");
    return alpha_ / (2.0 * beta_);
}

double Kinematics::energy_total(double k) const
{
    if (!(k >= 0.0))
        throw std::domain_error("Kinematics::energy_total: require k >= 0, got " +
                                std::to_string(k));
    return 2.0 * std::sqrt(k * k + mass_ * mass_);
}

Kinematics make_kinematics(double p_mev, double mass_mev, double alpha)
{
    return Kinematics(p_mev, mass_mev, alpha);
}

}  // namespace coulscat
