#include <gtest/gtest.h>

#include <cmath>

#include <dbn/classical_zeta.hpp>

namespace cz = dbn::classical;

TEST(Classical, PhiSeries) {
  EXPECT_NEAR(cz::phi_u(0.0, 1), 0.89145, 1e-5);
  EXPECT_NEAR(cz::phi_u(0.0, 3), 0.89339, 1e-5);
  EXPECT_NEAR(cz::phi_u(0.0, 3) - cz::phi_u(0.0, 2), 0.0, 1e-8);
  EXPECT_LT(cz::phi_remainder_bound(0.0, 3), 1e-8);
  EXPECT_LT(std::abs(cz::phi_u(2.0)), 1e-60 * cz::phi_u(0.0));
  EXPECT_EQ(cz::phi_u(-0.7), cz::phi_u(0.7));
  EXPECT_NEAR(cz::log_phi_u(0.3), std::log(cz::phi_u(0.3)), 1e-12);
  EXPECT_TRUE(std::isfinite(cz::log_phi_u(4.0)));
}

TEST(Classical, XiAtHalf) {
  EXPECT_NEAR(cz::xi_t_classical(0.0, 0.0), 0.497120778188, 1e-9);
}

TEST(Classical, FirstZero) {
  EXPECT_GT(cz::xi_t_classical(0.0, 14.0), 0.0);
  EXPECT_LT(cz::xi_t_classical(0.0, 14.3), 0.0);
}

TEST(Classical, EvenAndFullLineAgree) {
  for (double x : {0.0, 1.5, 7.0}) {
    const double half = cz::xi_t_classical(-0.5, x);
    EXPECT_EQ(half, cz::xi_t_classical(-0.5, -x));
    const auto full = cz::xi_t_classical_full_line(-0.5, x);
    EXPECT_NEAR(full.real(), half, 1e-12 * (1 + std::abs(half)));
    EXPECT_NEAR(full.imag(), 0.0, 1e-12);
  }
}

TEST(Classical, QuadratureConverges) {
  for (double t : {-0.5, 0.0, 0.5}) {
    for (double x : {0.0, 5.0, 14.1}) {
      const double a = cz::xi_t_classical(t, x, 6.0, 32, 2000);
      const double b = cz::xi_t_classical(t, x, 6.0, 32, 4000);
      EXPECT_LT(std::abs(a - b), 1e-8);
    }
  }
}

TEST(Classical, BackwardsHeatEquation) {
  const double h = 1e-3;
  for (double t : {-0.5, 0.0, 0.5}) {
    for (double x : {0.0, 3.0, 10.0}) {
      const double f = cz::xi_t_classical(t, x);
      const double ft = (cz::xi_t_classical(t + h, x) - cz::xi_t_classical(t - h, x)) / (2 * h);
      const double fxx =
          (cz::xi_t_classical(t, x + h) - 2 * f + cz::xi_t_classical(t, x - h)) / (h * h);
      EXPECT_LT(std::abs(ft + fxx), 1e-4 * std::abs(f) + 1e-6) << "t=" << t << " x=" << x;
    }
  }
}

TEST(Classical, GuardRange) {
  EXPECT_THROW(cz::xi_t_classical(2.5, 0.0), std::domain_error);
  EXPECT_THROW(cz::xi_t_classical_full_line(-3.0, 0.0), std::domain_error);
  EXPECT_NO_THROW(cz::xi_t_classical(-2.0, 0.0));
}
