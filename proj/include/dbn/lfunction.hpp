#ifndef DBN_LFUNCTION_HPP
#define DBN_LFUNCTION_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dbn/character.hpp"
#include "dbn/good_pair.hpp"
#include "dbn/parallel.hpp"
#include "dbn/polynomial.hpp"
#include "dbn/roots.hpp"

namespace dbn {

enum class CoefficientMode { half, full };

/// c_n = sum of chi_D(f) over monic f of degree n.
inline std::int64_t character_sum(const QuadraticCharacter& chi, int n, unsigned workers = 1) {
  const MonicEnumerator monics(chi.modulus().modulus(), n);
  std::atomic<std::int64_t> total{0};
  parallel_for_chunks(monics.size(), workers, 4096, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<residue_t> f;
    std::int64_t local = 0;
    for (std::uint64_t k = begin; k < end; ++k) {
      monics.residues_at(k, f);
      local += chi.eval_residues(f);
    }
    total += local;
  });
  return total.load();
}

/// Dirichlet coefficients c_0..c_{2g} of L(s, chi_D) as a polynomial in q^{-s}.
///
/// half: c_0..c_g by enumeration, the rest from c_{g+n} = q^n c_{g-n}.
/// full: every coefficient by enumeration (q^{2g} evaluations for the top one).
inline std::vector<std::int64_t> dirichlet_coefficients(const Polynomial& d,
                                                        CoefficientMode mode = CoefficientMode::half,
                                                        unsigned workers = 1) {
  require_good_pair(d);
  const QuadraticCharacter chi(d);
  const int g = (d.degree() - 1) / 2;
  const auto q = static_cast<std::int64_t>(d.modulus());
  std::vector<std::int64_t> c(static_cast<std::size_t>(2 * g + 1), 0);
  const int enumerated = mode == CoefficientMode::full ? 2 * g : g;
  for (int n = 0; n <= enumerated; ++n) c[static_cast<std::size_t>(n)] = character_sum(chi, n, workers);
  if (mode == CoefficientMode::half) {
    std::int64_t qn = 1;
    for (int n = 1; n <= g; ++n) {
      qn *= q;
      c[static_cast<std::size_t>(g + n)] = qn * c[static_cast<std::size_t>(g - n)];
    }
  }
  return c;
}

/// Phi_n held exactly as integer * q^{half_power / 2}.
struct ExactPhi {
  std::int64_t integer = 0;
  int half_power = 0;

  double value(std::int64_t q) const {
    return static_cast<double>(integer) * std::pow(static_cast<double>(q), 0.5 * half_power);
  }
  friend bool operator==(const ExactPhi&, const ExactPhi&) = default;
};

/// A good pair (q, D) with its Dirichlet and Fourier coefficients.
class LFunction {
 public:
  /// Computes coefficients for a good pair.
  static LFunction compute(const Polynomial& d, CoefficientMode mode = CoefficientMode::half,
                           unsigned workers = 1) {
    auto c = dirichlet_coefficients(d, mode, workers);
    const int g = (d.degree() - 1) / 2;
    return LFunction(d.modulus(), d, g, std::move(c));
  }

  /// Builds from c_0..c_g alone (no D), filling the upper half by the
  /// functional equation. Useful when only the table coefficients are known.
  static LFunction from_half_coefficients(residue_t q, std::vector<std::int64_t> half) {
    require_odd_prime(q);
    if (half.size() < 2) throw std::invalid_argument("need c_0..c_g with g >= 1");
    if (half[0] != 1) throw std::invalid_argument("c_0 must be 1");
    const int g = static_cast<int>(half.size()) - 1;
    std::vector<std::int64_t> c(half);
    std::int64_t qn = 1;
    for (int n = 1; n <= g; ++n) {
      qn *= q;
      c.push_back(qn * half[static_cast<std::size_t>(g - n)]);
    }
    return LFunction(q, std::nullopt, g, std::move(c));
  }

  residue_t q() const noexcept { return q_; }
  int genus() const noexcept { return g_; }
  const std::optional<Polynomial>& discriminant() const noexcept { return d_; }
  std::span<const std::int64_t> c() const noexcept { return c_; }
  std::span<const double> phi() const noexcept { return phi_; }
  std::span<const ExactPhi> phi_exact() const noexcept { return phi_exact_; }

  int nonzero_phi_count() const noexcept {
    return static_cast<int>(std::count_if(phi_exact_.begin(), phi_exact_.end(),
                                          [](const ExactPhi& e) { return e.integer != 0; }));
  }

  /// Chebyshev coefficients of Xi_t as a polynomial in cos x:
  /// a_0 = Phi_0, a_n = 2 Phi_n e^{t n^2}.
  std::vector<double> chebyshev_coefficients(double t) const {
    std::vector<double> a(phi_.size());
    a[0] = phi_[0];
    for (std::size_t n = 1; n < phi_.size(); ++n) {
      a[n] = 2.0 * phi_[n] * std::exp(t * static_cast<double>(n * n));
    }
    return a;
  }

  /// Xi_t(x) = Phi_0 + sum_n Phi_n e^{t n^2} (e^{inx} + e^{-inx}).
  complex_t xi(double t, complex_t x) const {
    complex_t sum = phi_[0];
    for (std::size_t n = 1; n < phi_.size(); ++n) {
      sum += 2.0 * phi_[n] * std::exp(t * static_cast<double>(n * n)) * std::cos(static_cast<double>(n) * x);
    }
    return sum;
  }

  double xi(double t, double x) const {
    double sum = phi_[0];
    for (std::size_t n = 1; n < phi_.size(); ++n) {
      sum += 2.0 * phi_[n] * std::exp(t * static_cast<double>(n * n)) * std::cos(static_cast<double>(n) * x);
    }
    return sum;
  }

 private:
  LFunction(residue_t q, std::optional<Polynomial> d, int g, std::vector<std::int64_t> c)
      : q_(q), g_(g), d_(std::move(d)), c_(std::move(c)) {
    for (int n = 0; n <= g_; ++n) {
      ExactPhi e{c_[static_cast<std::size_t>(g_ - n)], n};
      phi_exact_.push_back(e);
      phi_.push_back(e.value(q_));
    }
  }

  residue_t q_;
  int g_;
  std::optional<Polynomial> d_;
  std::vector<std::int64_t> c_;
  std::vector<double> phi_;
  std::vector<ExactPhi> phi_exact_;
};

/// Zeros of Xi_t over one period, Re x in [0, 2 pi).
struct ZeroSet {
  double t = 0.0;
  double tol = 1e-9;
  std::vector<double> gammas;       // real zeros in [0, pi], ascending
  std::vector<complex_t> zeros;     // all 2g zeros with multiplicity
  std::vector<complex_t> nonreal;   // zeros with |Im x| > tol
  double delta = 0.0;               // max |Im x|
  bool used_sign_change_fallback = false;

  bool all_real() const noexcept { return nonreal.empty(); }
};

/// Sign changes of sum a_k T_k(c) over a Chebyshev-spaced grid of [-1, 1]
/// (endpoints included). Exact zeros on the grid are skipped over.
inline int chebyshev_sign_changes(std::span<const double> a, int grid = 4096) {
  int changes = 0;
  int last_sign = 0;
  for (int i = 0; i <= grid; ++i) {
    const double c = -std::cos(std::numbers::pi * i / grid);
    const double v = chebyshev_value(a, c);
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

namespace detail {

// Roots in [-1, 1] located by sign changes on a grid and refined by bisection.
inline std::vector<complex_t> chebyshev_roots_by_bisection(std::span<const double> a, int grid = 4096) {
  std::vector<complex_t> roots;
  double prev_c = -1.0;
  double prev_v = chebyshev_value(a, prev_c);
  for (int i = 1; i <= grid; ++i) {
    const double c = -std::cos(std::numbers::pi * i / grid);
    const double v = chebyshev_value(a, c);
    if (prev_v == 0.0) {
      roots.emplace_back(prev_c);
    } else if ((prev_v < 0) != (v < 0) && v != 0.0) {
      double lo = prev_c, hi = c, flo = prev_v;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = chebyshev_value(a, mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.emplace_back(0.5 * (lo + hi));
    }
    prev_c = c;
    prev_v = v;
  }
  if (prev_v == 0.0) roots.emplace_back(prev_c);
  return roots;
}

inline complex_t normalize_angle(complex_t x) {
  double re = std::fmod(x.real(), 2.0 * std::numbers::pi);
  if (re < 0) re += 2.0 * std::numbers::pi;
  if (re >= 2.0 * std::numbers::pi) re -= 2.0 * std::numbers::pi;
  return {re, x.imag()};
}

}  // namespace detail

/// Zeros of Xi_t. Works in c = cos x: Xi_t is a degree-g polynomial in c,
/// and each root c gives the pair x = arccos(c), 2 pi - x.
inline ZeroSet zeros_at_t(const LFunction& L, double t, double tol = 1e-9) {
  const auto a = L.chebyshev_coefficients(t);
  ZeroSet z;
  z.t = t;
  z.tol = tol;
  auto croots = chebyshev_roots(a);
  const auto g = static_cast<std::size_t>(L.genus());
  if (croots.size() != g) throw NumericalFailure("root count differs from the genus");

  if (t >= 0.0) {
    const bool off_segment = std::any_of(croots.begin(), croots.end(), [](complex_t c) {
      return std::abs(c.imag()) > 1e-6 || std::abs(c.real()) > 1.0 + 1e-6;
    });
    if (off_segment) {
      auto fallback = detail::chebyshev_roots_by_bisection(a);
      if (fallback.size() != g) {
        throw NumericalFailure("eigenvalue and sign-change root counts disagree");
      }
      croots = std::move(fallback);
      z.used_sign_change_fallback = true;
    }
  }

  for (complex_t c : croots) {
    complex_t x = std::acos(c);
    if (std::abs(x.imag()) <= tol) x = {x.real(), 0.0};
    const complex_t mirror = detail::normalize_angle(-x);
    z.zeros.push_back(detail::normalize_angle(x));
    z.zeros.push_back(mirror);
    if (x.imag() == 0.0) {
      z.gammas.push_back(x.real());
    } else {
      z.nonreal.push_back(detail::normalize_angle(x));
      z.nonreal.push_back(mirror);
    }
    z.delta = std::max(z.delta, std::abs(x.imag()));
  }
  std::sort(z.gammas.begin(), z.gammas.end());
  std::sort(z.zeros.begin(), z.zeros.end(), [](complex_t l, complex_t r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  return z;
}

/// The 2g roots of the palindromic polynomial
/// Q_t(z) = Phi_0 z^g + sum_n Phi_n e^{t n^2} (z^{g+n} + z^{g-n}),
/// i.e. the zeros of Xi_t in the variable z = e^{ix}.
inline std::vector<complex_t> palindromic_roots(const LFunction& L, double t) {
  const int g = L.genus();
  std::vector<double> coeffs(static_cast<std::size_t>(2 * g + 1), 0.0);
  const auto phi = L.phi();
  coeffs[static_cast<std::size_t>(g)] = phi[0];
  for (int n = 1; n <= g; ++n) {
    const double v = phi[static_cast<std::size_t>(n)] * std::exp(t * n * n);
    coeffs[static_cast<std::size_t>(g + n)] = v;
    coeffs[static_cast<std::size_t>(g - n)] = v;
  }
  return polynomial_roots(coeffs);
}

}  // namespace dbn

#endif  // DBN_LFUNCTION_HPP
