#pragma once

#include <complex>

namespace coulscat {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Value of a series/recurrence evaluation together with an absolute error
/// estimate and the number of terms consumed.
struct SpecialFnResult {
    double value = 0.0;
    double est_error = 0.0;
    int terms_used = 1;
};

/// Digamma psi(x) for x > 0: recurrence shift to x >= 8, then the Bernoulli
/// asymptotic series.  Absolute error below 1e-13.
double digamma(double x);

/// Gauss hypergeometric 2F1(1/2, l+1; l+3/2; z) on 0 <= z < 1.
///
/// Power series for z <= 0.5.  For z > 0.5 the c = a+b logarithmic
/// 1-z transformation (DLMF 15.8.10) is used whenever its terms decay from
/// the start, which keeps the sum cancellation-free; otherwise the plain
/// series still converges and is used instead.
SpecialFnResult hyp2f1_half(int l, double z);

/// Same function with w = 1-z supplied directly, for callers that know the
/// distance to z = 1 exactly and must not lose it to cancellation.
/// Requires 0 < w < 1.
SpecialFnResult hyp2f1_half_near_one(int l, double one_minus_z);

/// Legendre polynomial P_l(x), |x| <= 1, by the three-term recurrence.
double legendre_p(int l, double x);

/// Streaming P_l(x) at fixed x: current() is P_l, advance() raises l by one.
class LegendreRecurrence {
public:
    explicit LegendreRecurrence(double x) : x_(x) {}
    int l() const { return l_; }
    double current() const { return p_; }
    void advance() {
        const double next = ((2.0 * l_ + 1.0) * x_ * p_ - l_ * pm1_) / (l_ + 1.0);
        pm1_ = p_;
        p_ = next;
        ++l_;
    }

private:
    double x_;
    int l_ = 0;
    double p_ = 1.0;    // P_l(x)
    double pm1_ = 0.0;  // P_{l-1}(x)
};

/// log Gamma(z) for Re(z) > 0 (Lanczos, g = 7, 9 coefficients).
std::complex<double> log_gamma(std::complex<double> z);

/// log Gamma(x) for real x > 0, same approximation.
double log_gamma_real(double x);

/// Coulomb phase sigma_l = arg Gamma(l+1 + i eta).
double coulomb_sigma_exact(int l, double eta);

}  // namespace coulscat
