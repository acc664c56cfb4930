#ifndef DBN_POLYNOMIAL_HPP
#define DBN_POLYNOMIAL_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbn/finite_field.hpp"

namespace dbn {

/// Dense univariate polynomial over F_p, coefficients in ascending degree.
///
/// The stored coefficient vector never has a trailing zero, so the zero
/// polynomial is the empty vector and has degree kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Polynomial(residue_t p) : p_(p) { require_odd_prime(p); }

  Polynomial(residue_t p, std::span<const std::int64_t> coefficients) : Polynomial(p) {
    coeffs_.reserve(coefficients.size());
    for (auto c : coefficients) coeffs_.push_back(detail::reduce(c, p));
    normalize();
  }

  Polynomial(residue_t p, std::initializer_list<std::int64_t> coefficients)
      : Polynomial(p, std::span<const std::int64_t>(coefficients.begin(), coefficients.size())) {}

  /// Takes residues already in [0, p). No validation of p beyond the caller's.
  static Polynomial from_residues(residue_t p, std::vector<residue_t> residues) {
    Polynomial r(p, Trusted{});
    r.coeffs_ = std::move(residues);
    r.normalize();
    return r;
  }

  static Polynomial constant(residue_t p, residue_t c) {
    return from_residues(p, {static_cast<residue_t>(c % p)});
  }

  /// T^n
  static Polynomial monomial(residue_t p, int n) {
    std::vector<residue_t> c(static_cast<std::size_t>(n) + 1, 0);
    c.back() = 1;
    return from_residues(p, std::move(c));
  }

  residue_t modulus() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::span<const residue_t> coefficients() const noexcept { return coeffs_; }
  residue_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Fp coeff(int i) const {
    if (i < 0 || i > degree()) return Fp(0, p_);
    return Fp(coeffs_[static_cast<std::size_t>(i)], p_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    std::vector<residue_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = detail::add_mod(at(i), o.at(i), p_);
    }
    return from_residues(p_, std::move(r));
  }

  Polynomial operator-(const Polynomial& o) const {
    check(o);
    std::vector<residue_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = detail::sub_mod(at(i), o.at(i), p_);
    }
    return from_residues(p_, std::move(r));
  }

  Polynomial operator-() const { return Polynomial(p_) - *this; }

  Polynomial operator*(const Polynomial& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return Polynomial(p_, Trusted{});
    std::vector<std::uint64_t> acc(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        acc[i + j] = (acc[i + j] + std::uint64_t{coeffs_[i]} * o.coeffs_[j]) % p_;
      }
    }
    std::vector<residue_t> r(acc.begin(), acc.end());
    return from_residues(p_, std::move(r));
  }

  Polynomial scaled(residue_t a) const {
    std::vector<residue_t> r(coeffs_);
    for (auto& c : r) c = detail::mul_mod(c, a % p_, p_);
    return from_residues(p_, std::move(r));
  }

  /// Divides out the leading coefficient. Zero stays zero.
  Polynomial monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(detail::inv_mod(leading(), p_));
  }

  /// (quotient, remainder) with deg(remainder) < deg(divisor).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    check(divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {Polynomial(p_, Trusted{}), *this};

    std::vector<residue_t> rem(coeffs_);
    const std::size_t db = divisor.coeffs_.size() - 1;
    std::vector<residue_t> quot(rem.size() - db, 0);
    const residue_t lead_inv = detail::inv_mod(divisor.leading(), p_);
    for (std::size_t k = rem.size(); k-- > db;) {
      const residue_t factor = detail::mul_mod(rem[k], lead_inv, p_);
      if (factor == 0) continue;
      const std::size_t shift = k - db;
      quot[shift] = factor;
      for (std::size_t j = 0; j <= db; ++j) {
        rem[shift + j] =
            detail::sub_mod(rem[shift + j], detail::mul_mod(factor, divisor.coeffs_[j], p_), p_);
      }
    }
    rem.resize(db);
    return {from_residues(p_, std::move(quot)), from_residues(p_, std::move(rem))};
  }

  Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
  Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(p_, Trusted{});
    std::vector<residue_t> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      r[i - 1] = detail::mul_mod(coeffs_[i], static_cast<residue_t>(i % p_), p_);
    }
    return from_residues(p_, std::move(r));
  }

  /// Horner evaluation.
  Fp eval_at(const Fp& x) const {
    if (x.modulus() != p_) throw ModulusMismatch();
    residue_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = detail::add_mod(detail::mul_mod(acc, x.value(), p_), *it, p_);
    }
    return Fp(acc, p_);
  }

  /// (this^e) mod m.
  Polynomial powmod(std::uint64_t e, const Polynomial& m) const {
    Polynomial base = *this % m;
    Polynomial result = constant(p_, 1) % m;
    while (e != 0) {
      if (e & 1U) result = (result * base) % m;
      base = (base * base) % m;
      e >>= 1U;
    }
    return result;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(coeffs_[i]);
    }
    return s;
  }

 private:
  struct Trusted {};
  Polynomial(residue_t p, Trusted) : p_(p) {}

  residue_t at(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  void check(const Polynomial& o) const {
    if (o.p_ != p_) throw ModulusMismatch();
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  residue_t p_;
  std::vector<residue_t> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool is_squarefree(const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  return gcd(d, d.derivative()).degree() == 0;
}

/// Yields the p^n monic polynomials of degree n, indexed so that the
/// ascending coefficient vectors (a_0, ..., a_{n-1}) are in lexicographic
/// order. Any index can be materialized directly, so workers can take
/// disjoint index ranges.
class MonicEnumerator {
 public:
  MonicEnumerator(residue_t p, int n) : p_(p), n_(n) {
    require_odd_prime(p);
    if (n < 0) throw std::invalid_argument("MonicEnumerator: negative degree");
    count_ = 1;
    for (int i = 0; i < n; ++i) {
      if (count_ > (UINT64_MAX / p)) throw std::overflow_error("MonicEnumerator: p^n overflows");
      count_ *= p;
    }
  }

  std::uint64_t size() const noexcept { return count_; }
  residue_t modulus() const noexcept { return p_; }
  int degree() const noexcept { return n_; }

  /// Coefficients of the k-th polynomial (length n + 1, leading 1) written into out.
  void residues_at(std::uint64_t k, std::vector<residue_t>& out) const {
    out.assign(static_cast<std::size_t>(n_) + 1, 0);
    out[static_cast<std::size_t>(n_)] = 1;
    for (int i = n_ - 1; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = static_cast<residue_t>(k % p_);
      k /= p_;
    }
  }

  Polynomial at(std::uint64_t k) const {
    if (k >= count_) throw std::out_of_range("MonicEnumerator: index out of range");
    std::vector<residue_t> r;
    residues_at(k, r);
    return Polynomial::from_residues(p_, std::move(r));
  }

  class iterator {
   public:
    using value_type = Polynomial;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const MonicEnumerator* e, std::uint64_t k) : e_(e), k_(k) {}
    Polynomial operator*() const { return e_->at(k_); }
    iterator& operator++() {
      ++k_;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++k_;
      return t;
    }
    bool operator==(const iterator& o) const { return k_ == o.k_; }

   private:
    const MonicEnumerator* e_ = nullptr;
    std::uint64_t k_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  residue_t p_;
  int n_;
  std::uint64_t count_ = 1;
};

/// Monic irreducible factors of d (with multiplicity), by trial division
/// over monic polynomials of increasing degree.
inline std::vector<Polynomial> monic_factors(const Polynomial& d) {
  if (d.degree() < 1) throw std::invalid_argument("monic_factors: constant input");
  std::vector<Polynomial> factors;
  Polynomial rest = d.monic();
  for (int k = 1; 2 * k <= rest.degree(); ++k) {
    MonicEnumerator candidates(d.modulus(), k);
    for (std::uint64_t i = 0; i < candidates.size() && 2 * k <= rest.degree(); ++i) {
      Polynomial f = candidates.at(i);
      while (rest.degree() >= k) {
        auto [q, r] = rest.divmod(f);
        if (!r.is_zero()) break;
        factors.push_back(f);
        rest = std::move(q);
      }
    }
  }
  if (rest.degree() >= 1) factors.push_back(rest);
  return factors;
}

inline bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant input");
  const Polynomial m = f.monic();
  for (int k = 1; 2 * k <= m.degree(); ++k) {
    MonicEnumerator candidates(f.modulus(), k);
    for (std::uint64_t i = 0; i < candidates.size(); ++i) {
      if ((m % candidates.at(i)).is_zero()) return false;
    }
  }
  return true;
}

/// Coefficient-wise reduction of an integer polynomial; the degree may drop.
inline Polynomial reduce_int_poly(std::span<const std::int64_t> coefficients, residue_t p) {
  return Polynomial(p, coefficients);
}

/// Parses "1,2,0,1" (ascending, no whitespace) into integers.
inline std::vector<std::int64_t> parse_coefficients(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) throw std::invalid_argument("empty coefficient list");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    std::int64_t v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (item.empty() || ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("bad coefficient '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string format_coefficients(std::span<const std::int64_t> c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

}  // namespace dbn

#endif  // DBN_POLYNOMIAL_HPP
