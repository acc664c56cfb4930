#ifndef DBN_NEWMAN_HPP
#define DBN_NEWMAN_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbn/lfunction.hpp"
#include "dbn/roots.hpp"

namespace dbn {

/// A value of, or a bound on, the de Bruijn-Newman constant Lambda_D.
struct NewmanEstimate {
  enum class Kind {
    exact,
    bisect,
    double_zero_lower_bound,
    stopple_lower_bound,
    minus_infinity,
    bracket_exhausted,
    absent,  // the method produced no value (e.g. no positive root)
  };

  Kind kind = Kind::absent;
  double value = -std::numeric_limits<double>::infinity();
  std::optional<std::pair<double, double>> bracket;
  double tol = 0.0;
  std::string method_notes;

  bool has_value() const noexcept { return kind != Kind::absent; }
  bool is_minus_infinity() const noexcept { return kind == Kind::minus_infinity; }
};

inline std::string_view to_string(NewmanEstimate::Kind k) {
  using K = NewmanEstimate::Kind;
  switch (k) {
    case K::exact: return "exact";
    case K::bisect: return "bisect";
    case K::double_zero_lower_bound: return "double_zero_lower_bound";
    case K::stopple_lower_bound: return "stopple_lower_bound";
    case K::minus_infinity: return "minus_infinity";
    case K::bracket_exhausted: return "bracket_exhausted";
    case K::absent: return "absent";
  }
  return "unknown";
}

inline NewmanEstimate minus_infinity_estimate(std::string notes) {
  return {NewmanEstimate::Kind::minus_infinity, -std::numeric_limits<double>::infinity(), std::nullopt, 0.0,
          std::move(notes)};
}

/// Genus one: Xi_t = Phi_0 + 2 sqrt(q) e^t cos x, so Lambda = log(|Phi_0| / (2 sqrt q)).
inline NewmanEstimate lambda_exact_genus1(const LFunction& L) {
  if (L.genus() != 1) throw std::invalid_argument("closed form requires genus 1");
  const std::int64_t a = L.c()[1];
  if (a == 0) return minus_infinity_estimate("Phi_0 = 0: Xi_t = 2 sqrt(q) e^t cos x for all t");
  const double v = std::log(std::abs(static_cast<double>(a)) / (2.0 * std::sqrt(static_cast<double>(L.q()))));
  return {NewmanEstimate::Kind::exact, v, std::nullopt, 0.0, "log(|a_p| / (2 sqrt p))"};
}

/// True iff Xi_t has only real zeros. A full set of g sign changes of the
/// cosine polynomial on [-1, 1] settles it; otherwise the eigenvalue path
/// classifies the roots.
inline bool all_zeros_real(const LFunction& L, double t, double tol = 1e-9) {
  // Only Phi_g survives: Xi_t is a multiple of cos(g x).
  if (L.nonzero_phi_count() <= 1) return true;
  const auto a = L.chebyshev_coefficients(t);
  if (chebyshev_sign_changes(a) == L.genus()) return true;
  return zeros_at_t(L, t, tol).all_real();
}

/// Lambda_D by expanding a bracket downward from 0 and bisecting on the
/// all-zeros-real predicate, which is monotone in t.
inline NewmanEstimate lambda_bisect(const LFunction& L, double tol_t = 1e-10, double bracket_floor = -50.0,
                                    double tol = 1e-9) {
  if (L.nonzero_phi_count() <= 1) {
    return minus_infinity_estimate("a single nonzero Fourier coefficient: zeros are real for every t");
  }
  if (!all_zeros_real(L, 0.0, tol)) throw NumericalFailure("Xi_0 reported a non-real zero");

  double hi = 0.0;
  double lo = std::max(-1.0, bracket_floor);
  while (true) {
    bool real = false;
    try {
      real = all_zeros_real(L, lo, tol);
    } catch (const NumericalFailure& e) {
      return {NewmanEstimate::Kind::bracket_exhausted, hi, std::make_pair(lo, hi), tol_t,
              std::string("coefficients no longer representable below t = ") + std::to_string(hi) + ": " +
                  e.what()};
    }
    if (!real) break;
    hi = lo;
    if (lo <= bracket_floor) {
      return {NewmanEstimate::Kind::bracket_exhausted, bracket_floor, std::make_pair(bracket_floor, 0.0),
              tol_t, "all zeros real down to the bracket floor: Lambda_D <= floor"};
    }
    lo = std::max(2.0 * lo, bracket_floor);
  }

  while (hi - lo > tol_t) {
    const double mid = 0.5 * (lo + hi);
    if (all_zeros_real(L, mid, tol)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {NewmanEstimate::Kind::bisect, 0.5 * (lo + hi), std::make_pair(lo, hi), tol_t, "bisection"};
}

/// Where a forced double zero is sought: x = 0, x = pi, or whichever gives
/// the larger bound.
enum class DoubleZeroPoint { zero, pi, best };

namespace detail {

inline double eval_sparse(std::span<const double> coeffs, double y) {
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * y + coeffs[k];
  return v;
}

// Largest positive real root of sum coeffs_k y^k, if any.
inline std::optional<double> largest_positive_root(std::span<const double> coeffs) {
  const double lead = coeffs.back();
  double cauchy = 0.0;
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) cauchy = std::max(cauchy, std::abs(coeffs[k] / lead));
  const double y_max = 1.0 + cauchy;

  auto bisect = [&](double lo, double hi) {
    double flo = eval_sparse(coeffs, lo);
    for (int it = 0; it < 300 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = eval_sparse(coeffs, mid);
      if (fm == 0.0) return mid;
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  std::optional<double> best;
  for (complex_t r : polynomial_roots(coeffs)) {
    if (r.real() <= 0.0 || std::abs(r.imag()) > 1e-7 * std::max(1.0, r.real())) continue;
    double y = r.real();
    const double lo = y * (1 - 1e-7), hi = y * (1 + 1e-7);
    if ((eval_sparse(coeffs, lo) < 0) != (eval_sparse(coeffs, hi) < 0)) y = bisect(lo, hi);
    if (!best || y > *best) best = y;
  }

  // Any sign change above the candidate wins; it would mean the eigenvalues
  // missed a root.
  const double start = best ? *best * (1 + 1e-6) : 0.0;
  const int grid = 4096;
  double prev_y = start;
  double prev_v = eval_sparse(coeffs, prev_y);
  std::optional<std::pair<double, double>> top_change;
  for (int i = 1; i <= grid; ++i) {
    const double y = start + (y_max - start) * i / grid;
    const double v = eval_sparse(coeffs, y);
    if (prev_v != 0.0 && v != 0.0 && (prev_v < 0) != (v < 0)) top_change = std::make_pair(prev_y, y);
    prev_y = y;
    prev_v = v;
  }
  if (top_change) best = bisect(top_change->first, top_change->second);
  return best;
}

inline NewmanEstimate double_zero_at(const LFunction& L, bool at_pi) {
  const int g = L.genus();
  const auto phi = L.phi();
  std::vector<double> coeffs(static_cast<std::size_t>(g * g + 1), 0.0);
  coeffs[0] = phi[0];
  for (int n = 1; n <= g; ++n) {
    const double sign = (at_pi && (n % 2 == 1)) ? -1.0 : 1.0;
    coeffs[static_cast<std::size_t>(n * n)] += 2.0 * sign * phi[static_cast<std::size_t>(n)];
  }
  const auto root = largest_positive_root(coeffs);
  const std::string where = at_pi ? "x = pi" : "x = 0";
  if (!root) {
    return {NewmanEstimate::Kind::absent, -std::numeric_limits<double>::infinity(), std::nullopt, 0.0,
            "Xi_t(" + where.substr(4) + ") has no zero for any real t"};
  }
  return {NewmanEstimate::Kind::double_zero_lower_bound, std::log(*root), std::nullopt, 1e-12,
          "largest real t with Xi_t = 0 at " + where};
}

}  // namespace detail

/// Lower bound on Lambda_D from the largest t at which Xi_t vanishes at a
/// point where evenness forces even order: the largest positive root y* of
/// Phi_0 + 2 sum_n (+-1)^n Phi_n y^{n^2}, returned as log y*.
inline NewmanEstimate double_zero_lower_bound(const LFunction& L, DoubleZeroPoint point = DoubleZeroPoint::zero) {
  switch (point) {
    case DoubleZeroPoint::zero: return detail::double_zero_at(L, false);
    case DoubleZeroPoint::pi: return detail::double_zero_at(L, true);
    case DoubleZeroPoint::best: {
      auto a = detail::double_zero_at(L, false);
      auto b = detail::double_zero_at(L, true);
      if (!a.has_value()) return b;
      if (!b.has_value()) return a;
      return a.value >= b.value ? a : b;
    }
  }
  throw std::invalid_argument("unknown double-zero point");
}

namespace detail {

// csc^2(x) - 1/x^2 without cancellation near 0.
inline double csc2_minus_inv2(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 / 3.0 + x2 / 15.0 + 2.0 * x2 * x2 / 189.0;
  }
  const double s = std::sin(x);
  return 1.0 / (s * s) - 1.0 / (x * x);
}

inline double csc2(double x) {
  const double s = std::sin(x);
  return 1.0 / (s * s);
}

}  // namespace detail

/// G = sum over all zeros z != +-gamma_1 of 2 / (gamma_1 - z)^2, in closed
/// form from the positive zeros gamma_1 < ... < gamma_g in (0, pi).
inline double stopple_G(std::span<const double> gammas) {
  if (gammas.empty()) throw std::invalid_argument("stopple_G: no zeros");
  const double g1 = gammas[0];
  if (!(g1 > 0.0)) throw std::domain_error("stopple_G: gamma_1 must be positive");
  for (std::size_t j = 1; j < gammas.size(); ++j) {
    if (!(gammas[j] - gammas[j - 1] > 1e-12)) throw std::domain_error("stopple_G: repeated zero");
  }
  if (!(gammas.back() < std::numbers::pi)) throw std::domain_error("stopple_G: zero at pi is repeated");
  double sum = 1.0 / 6.0 + 0.5 * detail::csc2_minus_inv2(g1);
  for (std::size_t j = 1; j < gammas.size(); ++j) {
    sum += 0.5 * detail::csc2(0.5 * (g1 + gammas[j]));
    sum += 0.5 * detail::csc2(0.5 * (g1 - gammas[j]));
  }
  return sum;
}

inline double stopple_G(const ZeroSet& zeros) {
  if (!zeros.all_real()) throw std::domain_error("stopple_G: non-real zeros");
  return stopple_G(zeros.gammas);
}

/// Lambda_D > ((1 - 5 gamma_1^2 G)^{4/5} - 1) / (8 G), valid when 5 gamma_1^2 G < 1.
inline NewmanEstimate stopple_lower_bound(double gamma1, double G) {
  const double k = 5.0 * gamma1 * gamma1 * G;
  if (!(G > 0.0) || !(k < 1.0)) throw std::domain_error("stopple bound needs 5 gamma_1^2 G < 1");
  const double v = (std::pow(1.0 - k, 0.8) - 1.0) / (8.0 * G);
  return {NewmanEstimate::Kind::stopple_lower_bound, v, std::nullopt, 0.0, "close-zero-pair bound"};
}

struct StoppleData {
  std::vector<double> gamma;
  std::vector<double> gamma_tilde;  // (g / pi) gamma_j
  double G = 0.0;
  bool condition_ok = false;        // 5 gamma_1^2 G < 1
  std::optional<double> bound;
};

inline StoppleData stopple_data(const LFunction& L, double tol = 1e-9) {
  const ZeroSet zeros = zeros_at_t(L, 0.0, tol);
  StoppleData s;
  s.gamma = zeros.gammas;
  for (double gm : s.gamma) s.gamma_tilde.push_back(L.genus() / std::numbers::pi * gm);
  s.G = stopple_G(zeros);
  s.condition_ok = 5.0 * s.gamma[0] * s.gamma[0] * s.G < 1.0;
  if (s.condition_ok) s.bound = stopple_lower_bound(s.gamma[0], s.G).value;
  return s;
}

/// Sufficient conditions for 5 gamma_1^2 G < 1: g >= 13,
/// (g gamma_1 / pi)^2 <= 1 / (500 g), and 1/2 <= g gamma_2 / pi <= 2.
inline bool crude_condition_check(std::span<const double> gammas, int g) {
  if (g < 13) return false;
  if (gammas.size() < 2) throw std::invalid_argument("crude_condition_check: need two positive zeros");
  const double t1 = g / std::numbers::pi * gammas[0];
  const double t2 = g / std::numbers::pi * gammas[1];
  return t1 * t1 <= 1.0 / (500.0 * g) && 0.5 <= t2 && t2 <= 2.0;
}

inline bool crude_condition_check(const ZeroSet& zeros, int g) { return crude_condition_check(zeros.gammas, g); }

/// Strip half-width after heat-flow time s, starting from half-width delta.
inline double strip_bound(double delta, double s) {
  if (delta < 0.0 || s < 0.0) throw std::invalid_argument("strip_bound: delta and s must be nonnegative");
  return std::sqrt(std::max(delta * delta - 2.0 * s, 0.0));
}

}  // namespace dbn

#endif  // DBN_NEWMAN_HPP
