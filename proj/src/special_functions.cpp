#include "coulscat/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "coulscat/errors.hpp"

namespace coulscat {

namespace {

constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
constexpr double kLn2 = 0.69314718055994530941723212145817657;

// Lanczos g = 7 coefficients (Godfrey).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Direct Gauss series for 2F1(1/2, l+1; l+3/2; z).  All terms are positive
// and the term ratio stays below z, so truncation is a clean geometric tail.
SpecialFnResult hyp_direct_series(int l, double z)
{
    const double a = 0.5, b = l + 1.0, c = l + 1.5;
    const int max_terms = 400000;
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (term <= 1e-16 * sum) {
            if (!std::isfinite(sum))
                throw convergence_error("hyp2f1_half: series overflow at l=" +
                                        std::to_string(l));
            const double tail = term * z / (1.0 - z);
            return {sum, tail + 4e-16 * sum, n + 2};
        }
    }
    throw convergence_error("hyp2f1_half: power series stalled at l=" + std::to_string(l) +
                            ", z=" + std::to_string(z));
}

// DLMF 15.8.10 for c = a+b:
//   2F1(a,b;a+b;z) = G sum_n d_n [2 psi(n+1) - psi(n+a) - psi(n+b) - ln(1-z)],
//   G = Gamma(a+b)/(Gamma(a)Gamma(b)),  d_n = ((a)_n (b)_n / (n!)^2) (1-z)^n.
// Caller guarantees (l+1) w small enough that d_n never grows, hence all
// bracket factors share one sign and the sum is cancellation-free.
SpecialFnResult hyp_log_series(int l, double w)
{
    const double lnw = std::log(w);
    double psi1 = -kEulerGamma;               // psi(n+1)
    double psia = -kEulerGamma - 2.0 * kLn2;  // psi(n+1/2)
    double psib = digamma(l + 1.0);           // psi(n+l+1)
    double d = 1.0, sum = 0.0, term = 0.0;
    const int max_terms = 40000;
    int n = 0;
    for (; n < max_terms; ++n) {
        term = d * (2.0 * psi1 - psia - psib - lnw);
        sum += term;
        if (n >= 2 && std::abs(term) <= 1e-16 * std::abs(sum)) break;
        d *= (n + 0.5) * (n + l + 1.0) / ((n + 1.0) * (n + 1.0)) * w;
        psi1 += 1.0 / (n + 1.0);
        psia += 1.0 / (n + 0.5);
        psib += 1.0 / (n + l + 1.0);
    }
    if (n >= max_terms)
        throw convergence_error("hyp2f1_half: 1-z series stalled at l=" + std::to_string(l) +
                                ", 1-z=" + std::to_string(w));
    const double pref = std::exp(log_gamma_real(l + 1.5) - log_gamma_real(l + 1.0)) / kSqrtPi;
    if (!std::isfinite(pref * sum))
        throw convergence_error("hyp2f1_half: transformed series overflow at l=" +
                                std::to_string(l));
    const double r = std::min(0.95, (l + 1.0) * w);
    const double tail = std::abs(term) * r / (1.0 - r);
    return {pref * sum, pref * tail + 4e-15 * std::abs(pref * sum), n + 1};
}

}  // namespace

double digamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("digamma: require x > 0, got " + std::to_string(x));
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double u = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k x^{2k})
    const double bern =
        u * (1.0 / 12.0 -
        u * (1.0 / 120.0 -
        u * (1.0 / 252.0 -
        u * (1.0 / 240.0 -
        u * (1.0 / 132.0 -
        u * (691.0 / 32760.0 -
        u * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv - bern;
}

SpecialFnResult hyp2f1_half(int l, double z)
{
    if (l < 0)
        throw std::domain_error("hyp2f1_half: require l >= 0");
    if (!(z >= 0.0) || z >= 1.0)
        throw std::domain_error("hyp2f1_half: require 0 <= z < 1, got z=" + std::to_string(z));
    if (z == 0.0) return {1.0, 0.0, 1};
    if (z <= 0.5) return hyp_direct_series(l, z);
    return hyp2f1_half_near_one(l, 1.0 - z);
}

SpecialFnResult hyp2f1_half_near_one(int l, double one_minus_z)
{
    if (l < 0)
        throw std::domain_error("hyp2f1_half_near_one: require l >= 0");
    if (!(one_minus_z > 0.0) || one_minus_z >= 1.0)
        throw std::domain_error("hyp2f1_half_near_one: require 0 < 1-z < 1, got " +
                                std::to_string(one_minus_z));
    if ((l + 1.0) * one_minus_z <= 0.35) return hyp_log_series(l, one_minus_z);
    return hyp_direct_series(l, 1.0 - one_minus_z);
}

double legendre_p(int l, double x)
{
    if (l < 0)
        throw std::domain_error("legendre_p: require l >= 0");
    if (!(std::abs(x) <= 1.0))
        throw std::domain_error("legendre_p: require |x| <= 1, got x=" + std::to_string(x));
    LegendreRecurrence rec(x);
    for (int k = 0; k < l; ++k) rec.advance();
    return rec.current();
}

std::complex<double> log_gamma(std::complex<double> z)
{
    if (!(z.real() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("log_gamma: require finite z with Re(z) > 0");
    const std::complex<double> zm1 = z - 1.0;
    std::complex<double> acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zm1 + static_cast<double>(i));
    const std::complex<double> t = zm1 + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

double log_gamma_real(double x)
{
    return log_gamma(std::complex<double>(x, 0.0)).real();
}

double coulomb_sigma_exact(int l, double eta)
{
    if (l < 0)
        throw std::domain_error("coulomb_sigma_exact: require l >= 0");
    if (!std::isfinite(eta))
        throw std::domain_error("coulomb_sigma_exact: require finite eta");
    if (eta == 0.0) return 0.0;
    return log_gamma(std::complex<double>(l + 1.0, eta)).imag();
}

}  // namespace coulscat
