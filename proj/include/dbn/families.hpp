#ifndef DBN_FAMILIES_HPP
#define DBN_FAMILIES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbn/good_pair.hpp"
#include "dbn/lfunction.hpp"
#include "dbn/newman.hpp"
#include "dbn/parallel.hpp"
#include "dbn/polynomial.hpp"

namespace dbn {

// ---------------------------------------------------------------------------
// Fixed q: every good D of genus 1..max_genus.
// ---------------------------------------------------------------------------

enum class SweepMethod { double_zero, bisect };

inline std::string_view to_string(SweepMethod m) {
  return m == SweepMethod::double_zero ? "double-zero" : "bisect";
}

struct FixedQItem {
  int genus = 0;
  std::uint64_t index = 0;  // position in the monic enumeration of degree 2g+1
  Polynomial d;
  std::vector<std::int64_t> c_half;  // c_0..c_g
  NewmanEstimate estimate;
  std::string error;  // estimator failure, empty on success
};

inline double comparable_value(const NewmanEstimate& e) {
  return e.has_value() ? e.value : -std::numeric_limits<double>::infinity();
}

/// Evaluates the good D among monic polynomials of degree 2g+1 with
/// enumeration index in [begin, end). Output is in index order.
inline std::vector<FixedQItem> sweep_fixed_q_range(residue_t q, int genus, std::uint64_t begin,
                                                   std::uint64_t end, SweepMethod method,
                                                   unsigned workers = 1) {
  const MonicEnumerator monics(q, 2 * genus + 1);
  end = std::min(end, monics.size());
  if (begin >= end) return {};
  std::vector<std::optional<FixedQItem>> slots(end - begin);
  parallel_for_chunks(end - begin, workers, 256, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      Polynomial d = monics.at(begin + i);
      if (!is_squarefree(d)) continue;
      FixedQItem item{genus, begin + i, d, {}, {}, {}};
      const LFunction L = LFunction::compute(d);
      item.c_half.assign(L.c().begin(), L.c().begin() + genus + 1);
      try {
        item.estimate = method == SweepMethod::double_zero ? double_zero_lower_bound(L) : lambda_bisect(L);
      } catch (const NumericalFailure& ex) {
        item.error = ex.what();
      }
      slots[i] = std::move(item);
    }
  });
  std::vector<FixedQItem> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

struct GenusSummary {
  int genus = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t good = 0;
  std::uint64_t failures = 0;
  std::optional<FixedQItem> best;
};

struct FixedQReport {
  residue_t q = 3;
  int max_genus = 1;
  SweepMethod method = SweepMethod::double_zero;
  std::vector<FixedQItem> items;
  std::map<int, GenusSummary> per_genus;
  std::optional<FixedQItem> overall_best;
  std::vector<double> running_sup;  // after each item, in emission order

  /// Folds one item into the summaries. Items arrive in canonical order.
  void add(FixedQItem item, bool keep_item = true) {
    auto& s = per_genus[item.genus];
    s.genus = item.genus;
    ++s.good;
    if (!item.error.empty()) ++s.failures;
    const double v = comparable_value(item.estimate);
    if (item.error.empty() && (!s.best || v > comparable_value(s.best->estimate))) s.best = item;
    if (item.error.empty() && (!overall_best || v > comparable_value(overall_best->estimate))) {
      overall_best = item;
    }
    running_sup.push_back(overall_best ? comparable_value(overall_best->estimate)
                                       : -std::numeric_limits<double>::infinity());
    if (keep_item) items.push_back(std::move(item));
  }
};

inline FixedQReport sweep_fixed_q(residue_t q, int max_genus, SweepMethod method, unsigned workers = 1) {
  require_odd_prime(q);
  if (max_genus < 1) throw std::invalid_argument("max_genus must be at least 1");
  FixedQReport report;
  report.q = q;
  report.max_genus = max_genus;
  report.method = method;
  for (int g = 1; g <= max_genus; ++g) {
    const MonicEnumerator monics(q, 2 * g + 1);
    report.per_genus[g].genus = g;
    report.per_genus[g].enumerated = monics.size();
    for (auto& item : sweep_fixed_q_range(q, g, 0, monics.size(), method, workers)) report.add(std::move(item));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Fixed integer cubic: the Sato-Tate family over primes.
// ---------------------------------------------------------------------------

/// sum over a in F_p of legendre(D(a)); the affine point count of
/// y^2 = D(T) is p + this.
inline std::int64_t legendre_point_sum(const Polynomial& d) {
  std::int64_t s = 0;
  const residue_t p = d.modulus();
  for (residue_t a = 0; a < p; ++a) s += d.eval_at(Fp(a, p)).legendre();
  return s;
}

/// a_p = -c_1 for the reduced character, computed in O(p):
/// c_1 = sum over monic linear f of (f / D_p) = (-1)^((p-1)/2) * legendre_point_sum.
inline std::int64_t trace_of_frobenius(std::span<const std::int64_t> dz, residue_t p) {
  require_odd_prime(p);
  const Polynomial d = reduce_int_poly(dz, p);
  if (d.degree() != 3) throw NotAGoodPair("reduction mod " + std::to_string(p) + " is not a cubic");
  require_good_pair(d);
  const std::int64_t sum = legendre_point_sum(d);
  return ((p - 1) / 2) % 2 == 0 ? -sum : sum;
}

/// Semicircle (Sato-Tate) CDF (theta - sin theta cos theta) / pi on [0, pi].
inline double semicircle_cdf(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw std::domain_error("semicircle_cdf: theta outside [0, pi]");
  return (theta - std::sin(theta) * std::cos(theta)) / std::numbers::pi;
}

/// Kolmogorov-Smirnov sup distance between the empirical CDF of samples and cdf.
template <class Cdf>
double ks_distance(std::vector<double> samples, Cdf cdf) {
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

struct SatoTateRecord {
  residue_t p = 3;
  std::int64_t a_p = 0;
  double theta_p = 0.0;   // cos theta_p = a_p / (2 sqrt p)
  double lambda_p = 0.0;  // log(|a_p| / (2 sqrt p)), -inf when a_p = 0
  std::optional<std::string> skipped;
};

struct SatoTateReport {
  std::vector<std::int64_t> dz;
  residue_t p_max = 3;
  std::vector<SatoTateRecord> records;  // ascending p, skipped ones included
  std::vector<double> running_sup;      // sup lambda over records[0..i]
  double sup_lambda = -std::numeric_limits<double>::infinity();
  std::optional<residue_t> argmax_p;
  std::size_t processed = 0;
  std::size_t skipped = 0;
  double ks_distance = 0.0;  // against the semicircle CDF
};

inline std::vector<residue_t> odd_primes_up_to(std::uint64_t n) {
  std::vector<residue_t> out;
  if (n < 3) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 3; i <= n; i += 2) {
    if (composite[i]) continue;
    out.push_back(static_cast<residue_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += 2 * i) composite[j] = true;
  }
  return out;
}

/// Discriminant of an integer cubic a3 T^3 + a2 T^2 + a1 T + a0.
inline __int128 cubic_discriminant(std::span<const std::int64_t> dz) {
  if (dz.size() != 4) throw std::invalid_argument("cubic_discriminant: need 4 coefficients");
  const __int128 d = dz[0], c = dz[1], b = dz[2], a = dz[3];
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

inline void require_squarefree_cubic(std::span<const std::int64_t> dz) {
  std::vector<std::int64_t> trimmed(dz.begin(), dz.end());
  while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
  if (trimmed.size() != 4) throw std::invalid_argument("polynomial must have degree 3");
  if (cubic_discriminant(trimmed) == 0) throw std::invalid_argument("cubic must be squarefree over Q");
}

inline SatoTateRecord sato_tate_record(std::span<const std::int64_t> dz, residue_t p) {
  SatoTateRecord r;
  r.p = p;
  try {
    r.a_p = trace_of_frobenius(dz, p);
  } catch (const NotAGoodPair& e) {
    r.skipped = std::string("bad reduction: ") + e.what();
    r.lambda_p = -std::numeric_limits<double>::infinity();
    return r;
  }
  const double two_sqrt_p = 2.0 * std::sqrt(static_cast<double>(p));
  const double ratio = static_cast<double>(r.a_p) / two_sqrt_p;
  if (!(std::abs(ratio) < 1.0)) throw std::logic_error("Hasse bound violated at p = " + std::to_string(p));
  r.theta_p = std::acos(ratio);
  r.lambda_p = r.a_p == 0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(ratio));
  return r;
}

inline SatoTateReport sato_tate_sweep(std::span<const std::int64_t> dz, std::uint64_t p_max, unsigned workers = 1) {
  require_squarefree_cubic(dz);
  SatoTateReport report;
  report.dz.assign(dz.begin(), dz.end());
  report.p_max = static_cast<residue_t>(p_max);
  const auto primes = odd_primes_up_to(p_max);
  report.records.resize(primes.size());
  parallel_for_chunks(primes.size(), workers, 64, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) report.records[i] = sato_tate_record(dz, primes[i]);
  });

  std::vector<double> thetas;
  for (const auto& r : report.records) {
    if (r.skipped) {
      ++report.skipped;
    } else {
      ++report.processed;
      thetas.push_back(r.theta_p);
      if (!report.argmax_p || r.lambda_p > report.sup_lambda) {
        report.argmax_p = r.p;
        report.sup_lambda = r.lambda_p;
      }
    }
    report.running_sup.push_back(report.sup_lambda);
  }
  report.ks_distance = ks_distance(std::move(thetas), semicircle_cdf);
  return report;
}

}  // namespace dbn

#endif  // DBN_FAMILIES_HPP
