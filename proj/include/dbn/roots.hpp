#ifndef DBN_ROOTS_HPP
#define DBN_ROOTS_HPP

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dbn {

/// A root finder failed to converge or the input is not representable.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

using complex_t = std::complex<double>;

namespace detail {

inline std::vector<complex_t> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalFailure("eigenvalue iteration did not converge");
  std::vector<complex_t> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

// Value and derivative of sum a_k x^k (ascending).
inline void horner(std::span<const double> a, complex_t x, complex_t& value, complex_t& deriv) {
  value = 0.0;
  deriv = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) {
    deriv = deriv * x + value;
    value = value * x + a[k];
  }
}

// Value and derivative of sum a_k T_k(x).
inline void chebyshev_eval(std::span<const double> a, complex_t x, complex_t& value, complex_t& deriv) {
  complex_t t_prev = 1.0, t_cur = x;
  complex_t d_prev = 0.0, d_cur = 1.0;
  value = a[0];
  deriv = 0.0;
  if (a.size() > 1) {
    value += a[1] * t_cur;
    deriv += a[1] * d_cur;
  }
  for (std::size_t k = 2; k < a.size(); ++k) {
    const complex_t t_next = 2.0 * x * t_cur - t_prev;
    const complex_t d_next = 2.0 * t_cur + 2.0 * x * d_cur - d_prev;
    value += a[k] * t_next;
    deriv += a[k] * d_next;
    t_prev = t_cur;
    t_cur = t_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
}

// A few Newton steps, kept only while they reduce the residual.
template <class Eval>
complex_t polish(complex_t x, Eval eval, int steps = 8) {
  complex_t v, d;
  eval(x, v, d);
  double best = std::abs(v);
  for (int i = 0; i < steps && best > 0.0; ++i) {
    if (d == complex_t(0.0)) break;
    const complex_t candidate = x - v / d;
    complex_t cv, cd;
    eval(candidate, cv, cd);
    if (!(std::abs(cv) < best)) break;
    x = candidate;
    v = cv;
    d = cd;
    best = std::abs(cv);
  }
  return x;
}

inline void require_finite_leading(std::span<const double> a) {
  if (a.empty()) throw std::invalid_argument("root finding on an empty coefficient list");
  double scale = 0.0;
  for (double c : a) {
    if (!std::isfinite(c)) throw NumericalFailure("non-finite polynomial coefficient");
    scale = std::max(scale, std::abs(c));
  }
  if (a.back() == 0.0 || std::abs(a.back()) < scale * 1e-290) {
    throw NumericalFailure("leading coefficient underflows relative to the others");
  }
}

}  // namespace detail

/// All roots of sum a_k x^k (ascending, a.back() != 0), counted with
/// multiplicity, via companion-matrix eigenvalues and Newton polishing.
inline std::vector<complex_t> polynomial_roots(std::span<const double> a) {
  detail::require_finite_leading(a);
  const std::size_t n = a.size() - 1;
  if (n == 0) return {};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(n - 1)) = -a[j] / a[n];
  }
  auto roots = detail::eigenvalues(m);
  for (auto& r : roots) {
    r = detail::polish(r, [&](complex_t x, complex_t& v, complex_t& d) { detail::horner(a, x, v, d); });
  }
  return roots;
}

/// All roots of sum a_k T_k(x) (Chebyshev basis, a.back() != 0) via the
/// colleague matrix.
inline std::vector<complex_t> chebyshev_roots(std::span<const double> a) {
  detail::require_finite_leading(a);
  const std::size_t n = a.size() - 1;
  if (n == 0) return {};
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
  if (n == 1) {
    m(0, 0) = -a[0] / a[1];
  } else {
    m(0, 1) = 1.0;
    for (Eigen::Index k = 1; k < N - 1; ++k) {
      m(k, k - 1) = 0.5;
      m(k, k + 1) = 0.5;
    }
    m(N - 1, N - 2) = 0.5;
    for (Eigen::Index j = 0; j < N; ++j) m(N - 1, j) -= a[static_cast<std::size_t>(j)] / (2.0 * a[n]);
  }
  auto roots = detail::eigenvalues(m);
  for (auto& r : roots) {
    r = detail::polish(r, [&](complex_t x, complex_t& v, complex_t& d) { detail::chebyshev_eval(a, x, v, d); });
  }
  return roots;
}

/// Real-valued Chebyshev series sum a_k T_k(x).
inline double chebyshev_value(std::span<const double> a, double x) {
  // Clenshaw.
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = a.size(); k-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + a[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + a[0];
}

}  // namespace dbn

#endif  // DBN_ROOTS_HPP
