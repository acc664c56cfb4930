#ifndef DBN_FINITE_FIELD_HPP
#define DBN_FINITE_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace dbn {

using residue_t = std::uint32_t;

/// Thrown when two operands live in different prime fields.
class ModulusMismatch : public std::invalid_argument {
 public:
  ModulusMismatch() : std::invalid_argument("operands have different moduli") {}
};

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p >= (1ULL << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^31");
  }
}

// Raw residue helpers. Inputs are assumed reduced; products go through 64 bits.
namespace detail {

constexpr residue_t add_mod(residue_t a, residue_t b, residue_t p) noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<residue_t>(s >= p ? s - p : s);
}

constexpr residue_t sub_mod(residue_t a, residue_t b, residue_t p) noexcept {
  return a >= b ? a - b : static_cast<residue_t>(std::uint64_t{a} + p - b);
}

constexpr residue_t mul_mod(residue_t a, residue_t b, residue_t p) noexcept {
  return static_cast<residue_t>((std::uint64_t{a} * b) % p);
}

constexpr residue_t pow_mod(residue_t a, std::uint64_t e, residue_t p) noexcept {
  residue_t result = 1 % p;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return result;
}

inline residue_t inv_mod(residue_t a, residue_t p) {
  if (a == 0) throw std::domain_error("inversion of zero in F_p");
  return pow_mod(a, p - 2, p);
}

// Euler's criterion.
constexpr int legendre(residue_t a, residue_t p) noexcept {
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

constexpr residue_t reduce(std::int64_t v, residue_t p) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<residue_t>(r < 0 ? r + p : r);
}

}  // namespace detail

/// An element of the prime field F_p, p an odd prime.
class Fp {
 public:
  Fp(std::int64_t value, residue_t modulus) : modulus_(modulus) {
    require_odd_prime(modulus);
    value_ = detail::reduce(value, modulus);
  }

  residue_t value() const noexcept { return value_; }
  residue_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp operator+(const Fp& o) const { return make(detail::add_mod(value_, check(o).value_, modulus_)); }
  Fp operator-(const Fp& o) const { return make(detail::sub_mod(value_, check(o).value_, modulus_)); }
  Fp operator*(const Fp& o) const { return make(detail::mul_mod(value_, check(o).value_, modulus_)); }
  Fp operator-() const { return make(value_ == 0 ? 0 : modulus_ - value_); }

  Fp inv() const { return make(detail::inv_mod(value_, modulus_)); }

  Fp pow(std::uint64_t exponent) const {
    return make(detail::pow_mod(value_, exponent, modulus_));
  }

  /// Legendre symbol (a/p) in {-1, 0, 1}.
  int legendre() const noexcept { return detail::legendre(value_, modulus_); }

  friend bool operator==(const Fp& a, const Fp& b) noexcept {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) {
    return os << a.value_ << " (mod " << a.modulus_ << ')';
  }

 private:
  struct Unchecked {};
  Fp(residue_t value, residue_t modulus, Unchecked) : value_(value), modulus_(modulus) {}

  Fp make(residue_t v) const { return Fp(v, modulus_, Unchecked{}); }

  const Fp& check(const Fp& o) const {
    if (o.modulus_ != modulus_) throw ModulusMismatch();
    return o;
  }

  residue_t value_ = 0;
  residue_t modulus_ = 3;
};

inline int legendre_scalar(const Fp& a) noexcept { return a.legendre(); }

}  // namespace dbn

#endif  // DBN_FINITE_FIELD_HPP
