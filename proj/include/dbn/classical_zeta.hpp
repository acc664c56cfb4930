#ifndef DBN_CLASSICAL_ZETA_HPP
#define DBN_CLASSICAL_ZETA_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

// Polya's deformation of the Riemann Xi function,
//   Xi_t(x) = int_0^inf e^{t u^2} Phi(u) (e^{iux} + e^{-iux}) du,
//   Phi(u)  = 2 sum_n (2 n^4 pi^2 e^{9u/2} - 3 n^2 pi e^{5u/2}) e^{-n^2 pi e^{2u}},
// evaluated by fixed-panel Gauss-Legendre quadrature on [0, u_max].

namespace dbn::classical {

inline constexpr double kMaxAbsT = 2.0;

namespace detail {

inline double phi_term(int n, double u) {
  const double pi = std::numbers::pi;
  const double n2 = static_cast<double>(n) * n;
  const double exponent = -n2 * pi * std::exp(2.0 * u);
  if (exponent < -745.0) return 0.0;
  return 2.0 * (2.0 * n2 * n2 * pi * pi * std::exp(4.5 * u) - 3.0 * n2 * pi * std::exp(2.5 * u)) *
         std::exp(exponent);
}

}  // namespace detail

/// Truncated series for Phi(u), n = 1..n_max. Even in u.
inline double phi_u(double u, int n_max = 32) {
  u = std::abs(u);
  double sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double term = detail::phi_term(n, u);
    if (term == 0.0) break;
    sum += term;
  }
  return sum;
}

/// Upper bound on the omitted tail sum_{n > n_max} |term_n|. Successive
/// terms shrink by at least 16 e^{-(2 n_max + 3) pi e^{2u}} past n_max.
inline double phi_remainder_bound(double u, int n_max = 32) {
  u = std::abs(u);
  const double pi = std::numbers::pi;
  const int n = n_max + 1;
  const double n2 = static_cast<double>(n) * n;
  const double exponent = -n2 * pi * std::exp(2.0 * u);
  if (exponent < -745.0) return 0.0;
  const double head = 2.0 * (2.0 * n2 * n2 * pi * pi * std::exp(4.5 * u) + 3.0 * n2 * pi * std::exp(2.5 * u)) *
                      std::exp(exponent);
  const double ratio = 16.0 * std::exp(-(2.0 * n_max + 3.0) * pi * std::exp(2.0 * u));
  return head / (1.0 - ratio);
}

/// Phi(u) truncated at n_max terms, with its tail bound.
struct ClassicalPhiSeries {
  int n_max = 32;

  double operator()(double u) const { return phi_u(u, n_max); }
  double remainder_bound(double u) const { return phi_remainder_bound(u, n_max); }
};

/// log Phi(u), finite even where Phi(u) itself underflows.
inline double log_phi_u(double u, int n_max = 32) {
  u = std::abs(u);
  const double pi = std::numbers::pi;
  const double e2u = std::exp(2.0 * u);
  auto log_term = [&](int n) {
    const double n2 = static_cast<double>(n) * n;
    // 2 n^2 pi e^{5u/2} (2 n^2 pi e^{2u} - 3) e^{-n^2 pi e^{2u}}
    return std::log(2.0 * n2 * pi) + 2.5 * u + std::log(2.0 * n2 * pi * e2u - 3.0) - n2 * pi * e2u;
  };
  const double lead = log_term(1);
  double rel = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    const double r = std::exp(log_term(n) - lead);
    if (r == 0.0) break;
    rel += r;
  }
  return lead + std::log1p(rel);
}

namespace detail {

// 10-point Gauss-Legendre rule on [-1, 1], computed once by Newton iteration.
struct GaussLegendre10 {
  std::array<double, 10> nodes{};
  std::array<double, 10> weights{};

  GaussLegendre10() {
    constexpr int n = 10;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[static_cast<std::size_t>(i)] = x;
      weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

inline const GaussLegendre10& gauss_legendre10() {
  static const GaussLegendre10 rule;
  return rule;
}

inline void check_t(double t) {
  if (!(std::abs(t) <= kMaxAbsT)) throw std::domain_error("|t| must be at most 2 for the classical evaluator");
}

// Calls f(u, w) for each quadrature node u in [a, b] with weight w.
template <class F>
void for_each_node(double a, double b, int quad_points, F f) {
  const auto& rule = gauss_legendre10();
  const int panels = std::max(1, quad_points / 10);
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * h;
    for (std::size_t i = 0; i < 10; ++i) f(mid + 0.5 * h * rule.nodes[i], 0.5 * h * rule.weights[i]);
  }
}

}  // namespace detail

/// Xi_t(x) = 2 int_0^{u_max} e^{t u^2} Phi(u) cos(u x) du.
inline double xi_t_classical(double t, double x, double u_max = 6.0, int n_max = 32, int quad_points = 2000) {
  detail::check_t(t);
  double sum = 0.0;
  detail::for_each_node(0.0, u_max, quad_points, [&](double u, double w) {
    const double phi = phi_u(u, n_max);
    if (phi != 0.0) sum += w * std::exp(t * u * u) * phi * std::cos(u * x);
  });
  return 2.0 * sum;
}

/// The same integral taken over [-u_max, u_max] with kernel e^{iux}.
inline std::complex<double> xi_t_classical_full_line(double t, double x, double u_max = 6.0, int n_max = 32,
                                                     int quad_points = 2000) {
  detail::check_t(t);
  std::complex<double> sum = 0.0;
  auto add = [&](double u, double w) {
    const double phi = phi_u(u, n_max);
    if (phi != 0.0) sum += w * std::exp(t * u * u) * phi * std::exp(std::complex<double>(0.0, u * x));
  };
  detail::for_each_node(-u_max, 0.0, quad_points, add);
  detail::for_each_node(0.0, u_max, quad_points, add);
  return sum;
}

}  // namespace dbn::classical

#endif  // DBN_CLASSICAL_ZETA_HPP
