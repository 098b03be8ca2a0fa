#include "doctest.h"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "coulscat/kinematics.hpp"

using namespace coulscat;

TEST_CASE("rest configuration")
{
    const Kinematics kin(0.0, 2.5, 0.1);
    CHECK(kin.energy() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(kin.beta() == 0.0);
    CHECK_THROWS_AS(kin.eta(), std::domain_error);
}

TEST_CASE("reference points quoted for the default mass and coupling")
{
    const Kinematics slow = make_kinematics(0.02);
    CHECK(slow.beta() == doctest::Approx(0.0391).epsilon(2e-3));
    CHECK(slow.eta() == doctest::Approx(0.0933).epsilon(1e-3));

    const Kinematics fast = make_kinematics(5.0);
    CHECK(fast.eta() == doctest::Approx(0.00367).epsilon(2e-3));
}

TEST_CASE("energy_total identities and value")
{
    const Kinematics kin(1.0);
    const double m = kin.mass();
    CHECK(kin.energy_total(0.0) == doctest::Approx(2.0 * m).epsilon(1e-15));
    CHECK(kin.energy_total(m) == doctest::Approx(2.0 * std::sqrt(2.0) * m).epsilon(1e-14));
    // direct evaluation at k = 5 MeV with the default electron mass
    const long double direct = 2.0L * std::sqrt(25.0L + 0.51099895L * 0.51099895L);
    CHECK(kin.energy_total(5.0) ==
          doctest::Approx(static_cast<double>(direct)).epsilon(1e-14));
    CHECK(static_cast<double>(direct) == doctest::Approx(10.052088).epsilon(1e-6));
}

TEST_CASE("energy_total monotone in k")
{
    const Kinematics kin(1.0);
    double prev = kin.energy_total(0.0);
    for (int i = 1; i <= 200; ++i) {
        const double k = 1e-3 * std::pow(2e4, i / 200.0);
        const double e = kin.energy_total(k);
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("nonrelativistic limit of eta")
{
    // eta * (p / (m/2)) -> alpha as p/m -> 0
    for (const double ratio : {0.01, 0.003, 0.001}) {
        const Kinematics kin(ratio * kElectronMassMeV);
        const double recovered = kin.eta() * kin.p() / (kin.mass() / 2.0);
        CHECK(std::abs(recovered / kin.alpha() - 1.0) <= 1e-3);
    }
}

TEST_CASE("eta exceeds alpha/2 whenever defined")
{
    for (const double p : {0.001, 0.02, 1.0, 5.0, 500.0}) {
        const Kinematics kin(p);
        CHECK(kin.eta() > kin.alpha() / 2.0);
    }
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(Kinematics(-1.0), std::domain_error);
    CHECK_THROWS_AS(Kinematics(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(Kinematics(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(Kinematics(1.0, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(Kinematics(1.0).energy_total(-0.5), std::domain_error);
    CHECK_NOTHROW(Kinematics(1.0, 1.0, 0.0));  // alpha = 0 is the free limit
}
