#include "doctest.h"

#include <cmath>
#include <limits>

#include "coulscat/coulomb_potential.hpp"
#include "coulscat/errors.hpp"
#include "coulscat/kinematics.hpp"
#include "coulscat/pv_quadrature.hpp"
#include "coulscat/special_functions.hpp"
#include "oracles.hpp"

using namespace coulscat;

namespace {

PVQuadConfig tight_config()
{
    PVQuadConfig cfg;
    cfg.inner_cutoff = 1e-13;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-13;
    return cfg;
}

}  // namespace

TEST_CASE("config validation")
{
    PVQuadConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.inner_cutoff = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = {};
    cfg.window_half_width = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = {};
    cfg.grading_ratio = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = {};
    cfg.outer_x_max = 0.2;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = {};
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("pole must be interior")
{
    auto f = [](double x) { return 1.0 / x; };
    CHECK_THROWS_AS(principal_value(f, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(principal_value(f, -1.0, -0.5), std::domain_error);
}

TEST_CASE("odd integrands vanish")
{
    auto f = [](double x) { return 1.0 / x; };
    const PVResult r = principal_value(f, -1.0, 1.0);
    CHECK(std::abs(r.value) < 1e-12);
    CHECK(r.evaluations > 0);

    const double c0 = c_l(0);
    auto g = [c0](double x) {
        const double u = c0 - std::log(std::abs(x));
        return u * u / x;
    };
    CHECK(std::abs(principal_value(g, -2.0, 2.0).value) < 1e-10);

    // generic even numerator F(|x|)/x
    auto h = [](double x) {
        const double lx = std::log(std::abs(x));
        return std::exp(-x * x) * (1.0 + lx * lx) / x;
    };
    CHECK(std::abs(principal_value(h, -3.0, 3.0).value) < 1e-10);
}

TEST_CASE("asymmetric range of 1/x gives the log of the endpoint ratio")
{
    auto f = [](double x) { return 1.0 / x; };
    const PVResult r = principal_value(f, -1.0, 2.0, tight_config());
    CHECK(std::abs(r.value - std::log(2.0)) < 1e-11);
}

TEST_CASE("exponential over x against the series value")
{
    auto f = [](double x) { return std::exp(x) / x; };
    const PVResult r = principal_value(f, -1.0, 1.0, tight_config());
    const double exact = static_cast<double>(oracles::pv_exp_over_x());
    CHECK(exact == doctest::Approx(2.114502).epsilon(1e-6));
    CHECK(std::abs(r.value - exact) < 1e-11);
    CHECK(r.est_error >= 0.0);
    CHECK(r.tail_bound == 0.0);
    CHECK(std::isfinite(r.value));
}

TEST_CASE("linearity within the reported errors")
{
    auto f = [](double x) { return std::exp(x) / x; };
    auto g = [](double x) { return (2.0 + std::sin(x)) / x; };
    const double a = 2.5, b = -1.25;
    auto combo = [&](double x) { return a * f(x) + b * g(x); };
    const PVQuadConfig cfg = tight_config();
    const PVResult rf = principal_value(f, -1.0, 1.5, cfg);
    const PVResult rg = principal_value(g, -1.0, 1.5, cfg);
    const PVResult rc = principal_value(combo, -1.0, 1.5, cfg);
    const double budget =
        std::abs(a) * rf.est_error + std::abs(b) * rg.est_error + rc.est_error + 1e-12;
    CHECK(std::abs(rc.value - (a * rf.value + b * rg.value)) <= budget);
}

TEST_CASE("grid refinement changes the value by less than twice the estimate")
{
    const double c0 = c_l(0);
    auto f = [c0](double x) {
        const double u = c0 - std::log(std::abs(x));
        return u * u * std::exp(0.2 * x) / x;
    };
    PVQuadConfig coarse;
    const PVResult r1 = principal_value(f, -1.0, 1.0, coarse);
    PVQuadConfig fine = coarse;
    fine.inner_cutoff *= 0.5;
    fine.grading_ratio *= 0.5;
    const PVResult r2 = principal_value(f, -1.0, 1.0, fine);
    CHECK(std::abs(r2.value - r1.value) <
          2.0 * std::max(r1.est_error, std::numeric_limits<double>::epsilon()));
}

TEST_CASE("infinite upper limit is truncated with an honest tail bound")
{
    // PV int_{-1}^{inf} dx / (x (1+x^2)) = (1/2) ln 2 from the antiderivative
    // ln(|x| / sqrt(1+x^2)).
    auto f = [](double x) { return 1.0 / (x * (1.0 + x * x)); };
    const PVResult r =
        principal_value(f, -1.0, std::numeric_limits<double>::infinity(), tight_config());
    const double exact = 0.5 * std::log(2.0);
    CHECK(r.tail_bound > 0.0);
    CHECK(r.tail_bound < 1e-7);
    CHECK(std::abs(r.value - exact) <= r.est_error + r.tail_bound + 1e-12);
}

TEST_CASE("unreachable tolerance raises convergence_error")
{
    auto f = [](double x) { return std::exp(x) / x; };
    PVQuadConfig cfg;
    cfg.abs_tol = 1e-300;
    cfg.rel_tol = 1e-16;
    CHECK_THROWS_AS(principal_value(f, -1.0, 1.0, cfg), convergence_error);
}

TEST_CASE("sinc/log identity: analytic zero crossing and closed-form value")
{
    // analytic side alpha(-ln(2 pr) + psi(1)) vanishes at 2 pr = e^{psi(1)}
    const double alpha = kFineStructureConstant;
    const double pr0 = 0.5 * std::exp(-kEulerGamma);
    CHECK(std::abs(sinc_log_identity(0, pr0, alpha, 1e5).analytic) < 1e-16);

    const SincLogPair s = sinc_log_identity(0, 100.0, alpha);
    CHECK(s.analytic ==
          doctest::Approx(alpha * (-5.29832 - 0.57722)).epsilon(1e-5));
    CHECK(std::abs(s.numeric - s.analytic) <= 1e-6 * alpha);
}

TEST_CASE("sinc/log identity over the parameter grid")
{
    const double alpha = kFineStructureConstant;
    for (const int l : {0, 1, 5}) {
        for (const double pr : {10.0, 100.0, 1000.0}) {
            const SincLogPair s = sinc_log_identity(l, pr, alpha);
            CAPTURE(l);
            CAPTURE(pr);
            CHECK(std::abs(s.numeric - s.analytic) <= 1e-6 * alpha);
        }
    }
}

TEST_CASE("sinc/log identity domain")
{
    CHECK_THROWS_AS(sinc_log_identity(-1, 10.0, 1e-2), std::domain_error);
    CHECK_THROWS_AS(sinc_log_identity(0, 0.0, 1e-2), std::domain_error);
    CHECK_THROWS_AS(sinc_log_identity(0, 10.0, 1e-2, 10.0), std::domain_error);
}
