#include "coulscat/cross_section.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "coulscat/special_functions.hpp"

namespace coulscat {

int XSecConfig::resolved_l_max() const
{
    if (l_max >= 0) return l_max;
    return static_cast<int>(std::ceil(7.0 / epsilon));
}

double XSecConfig::resolved_r_over_sigma_x() const
{
    if (r_over_sigma_x > 0.0) return r_over_sigma_x;
    return std::sqrt(epsilon);
}

void XSecConfig::validate() const
{
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::domain_error("XSecConfig: require 0 < epsilon < 1");
    if (order != 1 && order != 2)
        throw std::domain_error("XSecConfig: order must be 1 or 2");
    if (r_over_sigma_x != -1.0 && !(r_over_sigma_x > 0.0))
        throw std::domain_error("XSecConfig: R/sigma_x must be positive");
    if (l_max != -1 && l_max < 0)
        throw std::domain_error("XSecConfig: l_max must be >= 0 (or -1 for automatic)");
}

double delta_l_shift(int l, const Kinematics& kin, const XSecConfig& cfg)
{
    if (l < 0)
        throw std::domain_error("delta_l_shift: require l >= 0");
    const double eta = (kin.alpha() == 0.0) ? 0.0 : kin.eta();
    const double log_4pr_over_e =
        std::log(2.0 * cfg.resolved_r_over_sigma_x() / cfg.epsilon) - 1.0;
    return 4.0 * cfg.epsilon * eta * (log_4pr_over_e - digamma(l + 1.0));
}

std::complex<double> scattering_amplitude(double theta, const PhaseShiftTable& table,
                                          const XSecConfig& cfg)
{
    cfg.validate();
    if (!(theta >= 0.0 && theta <= M_PI))
        throw std::domain_error("scattering_amplitude: require 0 <= theta <= pi");
    const int l_max = cfg.resolved_l_max();
    if (l_max > table.l_max())
        throw std::invalid_argument("scattering_amplitude: table covers l <= " +
                                    std::to_string(table.l_max()) + ", need l_max = " +
                                    std::to_string(l_max));
    const Kinematics& kin = table.kin;
    if (!(kin.p() > 0.0))
        throw std::domain_error("scattering_amplitude: require p > 0");

    const double eps = cfg.epsilon;
    const double delta = cfg.delta_shift;
    const double cos_theta = std::cos(theta);

    std::complex<double> sum = 0.0;
    LegendreRecurrence pl(cos_theta);
    for (int l = 0; l <= l_max; ++l, pl.advance()) {
        if (cfg.symmetrize && (l % 2 == 1)) continue;
        double phase = table.entries[l].delta1_bar;
        if (cfg.order >= 2) phase += table.entries[l].delta2;
        const double gauss_arg = eps * (l + 0.5);
        const double shift = delta - delta_l_shift(l, kin, cfg);
        double weight = (2.0 * l + 1.0) * std::exp(-gauss_arg * gauss_arg) *
                        std::exp(-0.25 * shift * shift) * pl.current();
        if (cfg.symmetrize) weight *= 2.0;
        sum += weight * std::polar(1.0, 2.0 * phase);
    }
    return sum / (2.0 * kin.p());
}

double differential_cross_section(double theta, const PhaseShiftTable& table,
                                  const XSecConfig& cfg)
{
    return std::norm(scattering_amplitude(theta, table, cfg));
}

double rutherford(double p, double theta, const Kinematics& kin)
{
    if (!(p > 0.0))
        throw std::domain_error("rutherford: require p > 0");
    if (!(theta > 0.0 && theta <= M_PI))
        throw std::domain_error("rutherford: diverges at theta = 0; require 0 < theta <= pi");
    const double s = std::sin(0.5 * theta);
    const double ma = kin.mass() * kin.alpha();
    const double p2 = p * p;
    return ma * ma / (4.0 * p2 * p2 * s * s * s * s);
}

double moller(double p, double theta, const Kinematics& kin)
{
    if (!(p > 0.0))
        throw std::domain_error("moller: require p > 0");
    if (!(theta > 0.0 && theta < M_PI))
        throw std::domain_error("moller: diverges at theta = 0 and pi; require 0 < theta < pi");
    const double s = std::sin(theta);
    const double s2 = s * s;
    const double beta = p / std::sqrt(p * p + kin.mass() * kin.mass());
    const double b2 = beta * beta;
    const double a2 = kin.alpha() * kin.alpha();
    const double first = a2 * (1.0 + b2) * (1.0 - b2 * b2) / (4.0 * b2 * b2) *
                         (4.0 / (s2 * s2) - 3.0 / s2);
    const double second = a2 * (1.0 - b2) / 4.0 * (1.0 + 4.0 / s2);
    return (first + second) / (kin.mass() * kin.mass());
}

XSecRecord make_xsec_record(double theta, const PhaseShiftTable& table, const XSecConfig& cfg)
{
    XSecRecord rec;
    rec.p = table.kin.p();
    rec.theta = theta;
    rec.model = differential_cross_section(theta, table, cfg);
    rec.rutherford = rutherford(rec.p, theta, table.kin);
    rec.moller = moller(rec.p, theta, table.kin);
    rec.delta_shift_used = cfg.delta_shift;
    return rec;
}

DeltaProfile delta_profile(double theta, const PhaseShiftTable& table,
                           const XSecConfig& cfg, const std::vector<double>& delta_grid)
{
    cfg.validate();
    if (delta_grid.empty())
        throw std::domain_error("delta_profile: empty delta grid");
    const int l_max = cfg.resolved_l_max();
    if (l_max > table.l_max())
        throw std::invalid_argument("delta_profile: table does not cover l_max");
    const Kinematics& kin = table.kin;

    // The per-l factors other than the delta Gaussian do not depend on
    // delta, so precompute them once for the whole scan.
    std::vector<std::complex<double>> base;
    std::vector<double> centre;
    base.reserve(l_max + 1);
    centre.reserve(l_max + 1);
    const double cos_theta = std::cos(theta);
    LegendreRecurrence pl(cos_theta);
    for (int l = 0; l <= l_max; ++l, pl.advance()) {
        double weight = 0.0;
        double phase = 0.0;
        if (!(cfg.symmetrize && (l % 2 == 1))) {
            phase = table.entries[l].delta1_bar;
            if (cfg.order >= 2) phase += table.entries[l].delta2;
            const double gauss_arg = cfg.epsilon * (l + 0.5);
            weight = (2.0 * l + 1.0) * std::exp(-gauss_arg * gauss_arg) * pl.current();
            if (cfg.symmetrize) weight *= 2.0;
        }
        base.push_back(weight * std::polar(1.0, 2.0 * phase));
        centre.push_back(delta_l_shift(l, kin, cfg));
    }

    DeltaProfile out;
    out.delta = delta_grid;
    out.dsigma.resize(delta_grid.size());
    const double inv_2p = 1.0 / (2.0 * kin.p());
    std::size_t best = 0;
    for (std::size_t i = 0; i < delta_grid.size(); ++i) {
        std::complex<double> sum = 0.0;
        for (int l = 0; l <= l_max; ++l) {
            const double shift = delta_grid[i] - centre[l];
            sum += base[l] * std::exp(-0.25 * shift * shift);
        }
        out.dsigma[i] = std::norm(sum * inv_2p);
        if (out.dsigma[i] > out.dsigma[best]) best = i;
    }
    out.delta_star = out.delta[best];
    return out;
}

}  // namespace coulscat
