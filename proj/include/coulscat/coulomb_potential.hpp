#pragma once

namespace coulscat {

/// |k1/k2 - 1| below which matrix_element reports near_singular and returns
/// the logarithmic limit instead of the hypergeometric evaluation.  At this
/// width the two branches agree to a few parts in 1e7.
inline constexpr double kSingularCrossover = 1e-5;

/// Partial-wave Coulomb matrix element V_l(k1, k2) under the normalization
/// <p1|p2> = delta(p1 - p2).
struct PotentialMatrixElement {
    int l = 0;
    double k1 = 0.0;
    double k2 = 0.0;
    double value = 0.0;
    bool near_singular = false;
};

/// C_l = ln 2 - gamma_E - psi(l+1); constant term of the logarithmic limit.
double c_l(int l);

/// Logarithmic limit (alpha/pi)(C_l - ln|x|) of V_l at k1 = k2(1+x).
/// Valid for 0 < |x| < 0.1.
double singular_approx(int l, double x, double alpha);

/// V_l(k1, k2) for k1, k2 > 0, k1 != k2 (the equal-momentum point is a
/// genuine logarithmic pole and is rejected).
PotentialMatrixElement matrix_element(int l, double k1, double k2, double alpha,
                                      double crossover = kSingularCrossover);

/// V_l(k(1+x), k) parametrized by the relative offset x > -1, x != 0.
/// V_l depends on its momenta only through their ratio, and evaluating from
/// x keeps full precision arbitrarily close to the pole, where forming
/// 1 - (k1/k2)^2 from the two momenta would cancel.  No crossover
/// approximation is applied on this path.
double matrix_element_offset(int l, double x, double alpha);

}  // namespace coulscat
