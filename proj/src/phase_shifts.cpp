#include "coulscat/phase_shifts.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "coulscat/coulomb_potential.hpp"
#include "coulscat/parallel.hpp"
#include "coulscat/special_functions.hpp"

namespace coulscat {

double delta1_bar(int l, const Kinematics& kin)
{
    if (l < 0)
        throw std::domain_error("delta1_bar: require l >= 0");
    if (!(kin.p() > 0.0))
        throw std::domain_error("delta1_bar: require p > 0");
    return kin.eta() * digamma(l + 1.0);
}

double g_factor(double p, double x, const Kinematics& kin)
{
    if (!(p > 0.0))
        throw std::domain_error("g_factor: require p > 0");
    if (!(x > -1.0))
        throw std::domain_error("g_factor: require x > -1, got " + std::to_string(x));
    const double beta = p / std::sqrt(p * p + kin.mass() * kin.mass());
    return 2.0 * beta * (kin.energy_total(p * (1.0 + x)) + kin.energy_total(p)) /
           (4.0 * p * (2.0 + x));
}

std::pair<double, PVResult> delta2(int l, const Kinematics& kin, const PVQuadConfig& qcfg)
{
    if (l < 0)
        throw std::domain_error("delta2: require l >= 0");
    if (!(kin.p() > 0.0))
        throw std::domain_error("delta2: require p > 0");
    if (kin.alpha() == 0.0) return {0.0, PVResult{}};

    const double p = kin.p();
    const double alpha = kin.alpha();
    auto integrand = [l, p, alpha, &kin](double x) {
        const double v = matrix_element_offset(l, x, alpha);
        return v * v * g_factor(p, x, kin) / x;
    };
    const double two_beta = 2.0 * kin.beta();
    const double prefactor = 0.5 * M_PI / (two_beta * two_beta);
    // The configured absolute tolerance applies to the returned phase shift,
    // so the raw integral is driven tighter by the prefactor.
    PVQuadConfig raw_cfg = qcfg;
    raw_cfg.abs_tol = qcfg.abs_tol / prefactor;
    PVResult pv = principal_value(integrand, -1.0,
                                  std::numeric_limits<double>::infinity(), raw_cfg);
    pv.value *= prefactor;
    pv.est_error *= prefactor;
    pv.tail_bound *= prefactor;
    return {pv.value, pv};
}

PhaseShiftTable build_table(const Kinematics& kin, int l_max, int l_max_delta2,
                            const PVQuadConfig& qcfg, Delta2Extension policy)
{
    if (l_max < 0 || l_max_delta2 < 0 || l_max < l_max_delta2)
        throw std::domain_error("build_table: require l_max >= l_max_delta2 >= 0");
    qcfg.validate();

    PhaseShiftTable table{kin, {}, l_max_delta2, policy};
    table.entries.resize(l_max + 1);
    for (int l = 0; l <= l_max; ++l) {
        table.entries[l].l = l;
        table.entries[l].delta1_bar = delta1_bar(l, kin);
    }

    parallel_for_index(l_max_delta2 + 1, [&](int l) {
        auto [value, diag] = delta2(l, kin, qcfg);
        table.entries[l].delta2 = value;
        table.entries[l].delta2_quad = diag;
    });

    const double last = table.entries[l_max_delta2].delta2;
    for (int l = l_max_delta2 + 1; l <= l_max; ++l) {
        switch (policy) {
            case Delta2Extension::kHold:
                table.entries[l].delta2 = last;
                break;
            case Delta2Extension::kZero:
                table.entries[l].delta2 = 0.0;
                break;
            case Delta2Extension::kLogExtrapolate: {
                if (l_max_delta2 == 0) {
                    table.entries[l].delta2 = last;
                    break;
                }
                const double prev = table.entries[l_max_delta2 - 1].delta2;
                const double s0 = std::log(l_max_delta2 + 0.0);
                const double s1 = std::log(l_max_delta2 + 1.0);
                const double slope = (last - prev) / (s1 - s0);
                table.entries[l].delta2 = last + slope * (std::log(l + 1.0) - s1);
                break;
            }
        }
    }
    return table;
}

}  // namespace coulscat
