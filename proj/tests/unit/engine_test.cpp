#include <gtest/gtest.h>

#include <cmath>

#include "otto/engine.hpp"
#include "otto/errors.hpp"
#include "otto/precision.hpp"

namespace {

using namespace otto::engine;

TEST(EngineParams, Validation) {
  EXPECT_NO_THROW(EngineParams(0.6, 0.5, 0.5));
  EXPECT_THROW(EngineParams(1.2, 0.5, 0.0), otto::DomainError);
  EXPECT_THROW(EngineParams(0.6, 1.5, 0.0), otto::DomainError);
  EXPECT_THROW(EngineParams(0.6, 0.5, -1.0), otto::DomainError);
  EXPECT_THROW(EngineParams(0.6, 0.5, 0.0, 0.0), otto::DomainError);
}

TEST(HighTemperature, WorkAndEfficiency) {
  EXPECT_NEAR(work_ht(EngineParams(0.6, 0.5, 0.5)), 0.049341358696433565, 1e-15);
  EXPECT_NEAR(efficiency_ht(0.8, 0.5, 0.3), 0.1335414252610394, 1e-15);
  EXPECT_NEAR(efficiency_ht(0.6, 0.5, 0.0), -2.24, 1e-14);
  EXPECT_FALSE(pwc_ht(0.6, 0.5, 0.0));
  EXPECT_TRUE(pwc_ht(EngineParams(0.8, 0.5, 0.3)));
}

TEST(HighTemperature, SingularDenominator) {
  try {
    efficiency_ht(0.5, 0.4, 0.0);
    FAIL() << "expected SingularityError";
  } catch (const otto::SingularityError& e) {
    EXPECT_STREQ(e.kind(), "singularity");
  }
}

TEST(Bounds, SpotValues) {
  EXPECT_NEAR(eta_up(0.2, 1.0), 0.22387738483056396, 1e-15);
  EXPECT_NEAR(eta_up(0.2, 6.0), 0.4977853943263954, 1e-15);
  EXPECT_NEAR(eta_mw(0.2, 1.0), 0.2189517832537392, 1e-15);
  EXPECT_NEAR(generalized_carnot(0.2, 1.0), 0.78735821693273625, 1e-15);
  EXPECT_NEAR(eta_rk(0.5), 0.10819418755438784, 1e-15);
  EXPECT_NEAR(eta_up_thermal(0.5), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(optimal_ratio(0.5, 0.0), 0.8408964152537145, 1e-15);
}

TEST(Bounds, UnsqueezedReducesToThermal) {
  for (double eta_c : {0.1, 0.3, 0.5, 0.9}) {
    EXPECT_NEAR(eta_up(eta_c, 0.0), eta_up_thermal(eta_c), 1e-15);
    EXPECT_NEAR(eta_mw(eta_c, 0.0), eta_rk(eta_c), 1e-15);
    EXPECT_DOUBLE_EQ(generalized_carnot(eta_c, 0.0), eta_c);
  }
}

TEST(Bounds, SmallCarnotSlopes) {
  const double e = 1e-6;
  EXPECT_NEAR(eta_rk(e) / e, 1.0 / 6.0, 1e-6);
  EXPECT_NEAR(eta_up_thermal(e) / e, 3.0 - 2.0 * std::sqrt(2.0), 1e-6);
}

TEST(Bounds, HalfIsApproachedButNotReached) {
  double previous = 0.0;
  for (double r = 0.0; r <= 20.0; r += 0.5) {
    const double up = eta_up(0.2, r);
    EXPECT_LT(up, 0.5) << r;
    EXPECT_GE(up, previous) << r;
    previous = up;
  }
  const double far = eta_up(0.2, 400.0);
  EXPECT_TRUE(std::isfinite(far));
  EXPECT_LE(far, 0.5);
}

TEST(Bounds, Validation) {
  EXPECT_THROW(eta_up(0.0, 1.0), otto::DomainError);
  EXPECT_THROW(eta_up(1.0, 1.0), otto::DomainError);
  EXPECT_THROW(eta_mw(0.5, -1.0), otto::DomainError);
  EXPECT_THROW(eta_rk(1.2), otto::DomainError);
  EXPECT_NO_THROW(generalized_carnot(0.0, 1.0));
  EXPECT_THROW(generalized_carnot(1.0, 1.0), otto::DomainError);
}

TEST(RatioRoots, InvertsEfficiency) {
  const auto roots = efficiency_ratio_roots(0.1, 0.3, 0.4);
  EXPECT_NEAR(roots.lower, 0.6419669896727514, 1e-15);
  EXPECT_NEAR(roots.upper, 0.73376194737006171, 1e-15);
  EXPECT_DOUBLE_EQ(z2_of_eta(0.1, 0.3, 0.4), roots.lower);
  for (double x : {roots.lower, roots.upper}) {
    EXPECT_NEAR(efficiency_ht(std::sqrt(x), 0.7, 0.4), 0.1, 1e-13);
  }
}

TEST(RatioRoots, BoundaryCases) {
  EXPECT_THROW(z2_of_eta(0.5, 0.3, 0.4), otto::DomainError);
  EXPECT_THROW(z2_of_eta(-0.1, 0.3, 0.4), otto::DomainError);
  EXPECT_THROW(z2_of_eta(0.3, 0.3, 0.4), otto::NoSolutionError);
  // eta = 0 has the PWC edge z^2 = tau sech2r as its lower root.
  EXPECT_NEAR(z2_of_eta(0.0, 0.3, 0.4), 0.7 / std::cosh(0.8), 1e-15);
}

TEST(EngineBounds, Report) {
  const auto report = engine_bounds(0.2, 1.0);
  EXPECT_DOUBLE_EQ(report.eta_c, 0.2);
  EXPECT_DOUBLE_EQ(report.eta_up, eta_up(0.2, 1.0));
  EXPECT_DOUBLE_EQ(report.eta_mw, eta_mw(0.2, 1.0));
  EXPECT_DOUBLE_EQ(report.eta_c_gen, generalized_carnot(0.2, 1.0));
  EXPECT_DOUBLE_EQ(report.z_star, optimal_ratio(0.8, 1.0));
  EXPECT_TRUE(report.pwc_satisfied);
  EXPECT_FALSE(engine_bounds(0.2, 0.0, 0.5).pwc_satisfied);
}

TEST(Regime, Threshold) {
  EXPECT_TRUE(high_temperature_regime(0.1));
  EXPECT_TRUE(high_temperature_regime(kHighTemperatureThreshold));
  EXPECT_FALSE(high_temperature_regime(1.0));
}

TEST(Precision, QuadMatchesDouble) {
  const otto::Quad q = eta_up(otto::Quad(0.2), otto::Quad(1.0));
  EXPECT_NEAR(static_cast<double>(q), 0.22387738483056396, 1e-16);
}

}  // namespace
