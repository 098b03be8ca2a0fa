#include "coulscat/coulomb_potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "coulscat/special_functions.hpp"

namespace coulscat {

namespace {

constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

// (alpha/sqrt(pi)) (l! / Gamma(l+3/2)) r^{l+1} 2F1(1/2, l+1; l+3/2; r^2)
// with r = min(k1,k2)/max(k1,k2) < 1 and w = 1 - r^2 supplied separately so
// no precision is lost near r = 1.  Assembled in log space so large l cannot
// overflow the prefactor.
double value_from_ratio(int l, double r, double w, double log_r, double alpha)
{
    const double z = r * r;
    const SpecialFnResult f =
        (z <= 0.5) ? hyp2f1_half(l, z) : hyp2f1_half_near_one(l, w);
    const double log_pref =
        log_gamma_real(l + 1.0) - log_gamma_real(l + 1.5) + (l + 1.0) * log_r;
    return alpha / kSqrtPi * std::exp(log_pref) * f.value;
}

}  // namespace

double c_l(int l)
{
    if (l < 0)
        throw std::domain_error("c_l: require l >= 0");
    return std::log(2.0) - kEulerGamma - digamma(l + 1.0);
}

double singular_approx(int l, double x, double alpha)
{
    if (l < 0)
        throw std::domain_error("singular_approx: require l >= 0");
    if (x == 0.0)
        throw std::domain_error("singular_approx: x = 0 is the pole itself");
    if (!(std::abs(x) < 0.1))
        throw std::domain_error("singular_approx: limit form valid only for |x| < 0.1, got " +
                                std::to_string(x));
    return alpha / M_PI * (c_l(l) - std::log(std::abs(x)));
}

PotentialMatrixElement matrix_element(int l, double k1, double k2, double alpha,
                                      double crossover)
{
    if (l < 0)
        throw std::domain_error("matrix_element: require l >= 0");
    if (!(k1 > 0.0) || !(k2 > 0.0))
        throw std::domain_error("matrix_element: require positive momenta");
    if (k1 == k2)
        throw std::domain_error("matrix_element: pole at k1 = k2 = " + std::to_string(k1));
    if (!(crossover > 0.0) || !(crossover < 0.1))
        throw std::domain_error("matrix_element: require 0 < crossover < 0.1");

    const double lo = std::min(k1, k2), hi = std::max(k1, k2);
    const double x = (hi - lo) / lo;  // k_hi = k_lo (1 + x); symmetric in k1 <-> k2
    PotentialMatrixElement out{l, k1, k2, 0.0, x < crossover};
    if (out.near_singular) {
        out.value = singular_approx(l, x, alpha);
        return out;
    }
    const double r = lo / hi;
    out.value = value_from_ratio(l, r, (1.0 - r) * (1.0 + r), std::log(r), alpha);
    return out;
}

double matrix_element_offset(int l, double x, double alpha)
{
    if (l < 0)
        throw std::domain_error("matrix_element_offset: require l >= 0");
    if (!(x > -1.0))
        throw std::domain_error("matrix_element_offset: require x > -1, got " +
                                std::to_string(x));
    if (x == 0.0)
        throw std::domain_error("matrix_element_offset: pole at x = 0");

    double r, w, log_r;
    if (x > 0.0) {
        r = 1.0 / (1.0 + x);
        w = x * (2.0 + x) / ((1.0 + x) * (1.0 + x));
        log_r = -std::log1p(x);
    } else {
        r = 1.0 + x;
        w = -x * (2.0 + x);
        log_r = std::log1p(x);
    }
    return value_from_ratio(l, r, w, log_r, alpha);
}

}  // namespace coulscat
