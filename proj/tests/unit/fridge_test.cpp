#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "otto/errors.hpp"
#include "otto/fridge.hpp"

namespace {

using namespace otto::fridge;

const double kZeta23 = 7.0 - 4.0 * std::sqrt(3.0);   // tau = 2/3
const double kZeta34 = 10.0 - 4.0 * std::sqrt(6.0);  // tau = 3/4

TEST(FridgeParams, Validation) {
  EXPECT_NO_THROW(FridgeParams(0.5, 0.7, 0.0));
  EXPECT_THROW(FridgeParams(0.0, 0.7, 0.0), otto::DomainError);
  EXPECT_THROW(FridgeParams(0.5, 1.0, 0.0), otto::DomainError);
  EXPECT_THROW(FridgeParams(0.5, 0.7, -0.1), otto::DomainError);
}

TEST(Heats, EnergyBalance) {
  const auto h = heats_ht(0.458, 2.0 / 3.0, 0.0);
  EXPECT_NEAR(h.q2 + h.q4 + h.w_in, 0.0, 1e-15);
  EXPECT_GT(h.q4, 0.0);
  EXPECT_LT(h.q2, 0.0);
}

TEST(Cop, SpotValue) {
  EXPECT_NEAR(cop_ht(0.458, 2.0 / 3.0, 0.0), 0.071789537650667789, 1e-15);
}

TEST(Cop, NonCoolingThrowsWithMode) {
  try {
    cop_ht(0.9, 0.4, 0.0);
    FAIL() << "expected ModeError";
  } catch (const otto::ModeError& e) {
    EXPECT_NE(e.actual_mode(), "refrigerator");
  }
}

TEST(Bounds, ThermalSpotValues) {
  EXPECT_NEAR(zeta_up_thermal(2.0), kZeta23, 1e-15);
  EXPECT_NEAR(zeta_up_thermal(3.0), kZeta34, 1e-15);
  EXPECT_NEAR(zeta_up(2.0 / 3.0, 0.0), kZeta23, 1e-15);
  EXPECT_NEAR(zeta_up(0.75, 0.0), kZeta34, 1e-15);
}

TEST(Bounds, ThermalBoundVanishesAtUnitCarnot) {
  EXPECT_THROW(zeta_up_thermal(1.0), otto::InfeasibleError);
  EXPECT_THROW(zeta_up_thermal(0.5), otto::InfeasibleError);
  EXPECT_LT(zeta_up_thermal(1.0 + 1e-6), 1e-12);
}

TEST(Bounds, SqueezedInfeasibleSides) {
  try {
    zeta_up(0.4, 0.0);
    FAIL();
  } catch (const otto::InfeasibleError& e) {
    EXPECT_STREQ(e.what(), "tau*cosh(2r) <= 1/2");
  }
  try {
    zeta_up(0.8, 1.0);
    FAIL();
  } catch (const otto::InfeasibleError& e) {
    EXPECT_STREQ(e.what(), "tau*cosh(2r) >= 1");
  }
  EXPECT_THROW(zeta_up(0.5, 0.0), otto::InfeasibleError);
  EXPECT_THROW(zeta_up(1.0, 0.0), otto::DomainError);
}

TEST(Bounds, SqueezingExtendsCoolingBelowHalf) {
  const double r = std::acosh(1.5) / 2.0;  // tau_c = 0.6 at tau = 0.4
  const double tau_c = 0.4 * std::cosh(2.0 * r);
  EXPECT_NEAR(zeta_up(0.4, r), zeta_up_thermal(tau_c / (1.0 - tau_c)), 1e-14);
}

TEST(Carnot, Values) {
  EXPECT_DOUBLE_EQ(zeta_carnot(0.75), 3.0);
  EXPECT_TRUE(std::isinf(zeta_carnot(1.0)));
  EXPECT_THROW(zeta_carnot(0.0), otto::DomainError);
  EXPECT_DOUBLE_EQ(frequency_ratio_cop(0.25), 1.0 / 3.0);
}

TEST(Windows, TauWindow) {
  const Interval w = tau_window(0.5);
  EXPECT_NEAR(w.lower, 0.3240271368319427, 1e-15);
  EXPECT_NEAR(w.upper, 0.6480542736638854, 1e-15);
  EXPECT_FALSE(w.lower_closed);
  EXPECT_EQ(tau_window(0.0).lower, 0.5);
  EXPECT_EQ(tau_window(0.0).upper, 1.0);
}

TEST(Windows, RWindow) {
  const Interval quarter = r_window(0.25);
  EXPECT_NEAR(quarter.lower, 0.6584789484624084, 1e-15);
  EXPECT_NEAR(quarter.upper, 1.0317185344477803, 1e-15);
  EXPECT_FALSE(quarter.lower_closed);

  const Interval half = r_window(0.5);
  EXPECT_EQ(half.lower, 0.0);
  EXPECT_NEAR(half.upper, 0.6584789484624084, 1e-15);
  EXPECT_FALSE(half.lower_closed);
  EXPECT_FALSE(half.contains(0.0));

  const Interval three_quarter = r_window(0.75);
  EXPECT_NEAR(three_quarter.upper, 0.3976827306119528, 1e-15);
  EXPECT_TRUE(three_quarter.lower_closed);
  EXPECT_TRUE(three_quarter.contains(0.0));
}

TEST(Report, FeasibleAndInfeasible) {
  const auto ok = fridge_bounds(2.0 / 3.0, 0.0);
  EXPECT_TRUE(ok.cooling_feasible);
  ASSERT_TRUE(ok.zeta_up.has_value());
  EXPECT_NEAR(*ok.zeta_up, kZeta23, 1e-15);
  EXPECT_TRUE(ok.reason.empty());

  const auto bad = fridge_bounds(0.5, 0.0);
  EXPECT_FALSE(bad.cooling_feasible);
  EXPECT_FALSE(bad.zeta_up.has_value());
  EXPECT_EQ(bad.reason, "tau*cosh(2r) <= 1/2");
}

TEST(CoolingRatio, Limit) {
  EXPECT_NEAR(cooling_ratio_limit(0.75, 0.0), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(cooling_ratio_limit(0.4, 0.0), 0.0);
  EXPECT_EQ(cooling_ratio_limit(0.9, 1.0), 1.0);
}

}  // namespace
