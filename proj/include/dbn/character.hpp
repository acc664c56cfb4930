#ifndef DBN_CHARACTER_HPP
#define DBN_CHARACTER_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dbn/finite_field.hpp"
#include "dbn/polynomial.hpp"

// The quadratic character modulo D is the Jacobi symbol (f/D): a function of
// f mod D. Two evaluators live here. jacobi() runs the reciprocity ladder and
// never factors D; jacobi_oracle() factors D and applies Euler's criterion in
// each residue field F_p[T]/(P). They must agree everywhere.

namespace dbn {

namespace detail {

inline void trim(std::vector<residue_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// a <- a mod b, b monic and nonempty.
inline void mod_monic_inplace(std::vector<residue_t>& a, const std::vector<residue_t>& b, residue_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::size_t top = a.size() - 1;
    const residue_t factor = a[top];
    if (factor != 0) {
      const std::size_t shift = top - db;
      for (std::size_t j = 0; j < db; ++j) {
        a[shift + j] = sub_mod(a[shift + j], mul_mod(factor, b[j], p), p);
      }
    }
    a.pop_back();
    trim(a);
  }
}

// (a/b) for normalized a and monic b. Both buffers are consumed.
inline int jacobi_raw(std::vector<residue_t> a, std::vector<residue_t> b, residue_t p) {
  const std::uint64_t half = (p - 1) / 2;
  int sign = 1;
  while (true) {
    const std::size_t deg_b = b.size() - 1;
    if (deg_b == 0) return sign;
    mod_monic_inplace(a, b, p);
    if (a.empty()) return 0;

    const residue_t lc = a.back();
    if (lc != 1) {
      if ((deg_b & 1U) && legendre(lc, p) == -1) sign = -sign;
      const residue_t inv = inv_mod(lc, p);
      for (auto& c : a) c = mul_mod(c, inv, p);
    }
    const std::size_t deg_a = a.size() - 1;
    if (deg_a == 0) return sign;

    if ((half * deg_a * deg_b) & 1U) sign = -sign;
    std::swap(a, b);
  }
}

}  // namespace detail

/// chi_D for a fixed modulus D, validated once.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(Polynomial d) : d_(std::move(d)) {
    if (d_.degree() < 1) throw std::invalid_argument("character modulus must be non-constant");
    if (!d_.is_monic()) throw std::invalid_argument("character modulus must be monic");
    if (!is_squarefree(d_)) throw std::invalid_argument("character modulus must be squarefree");
    modulus_residues_.assign(d_.coefficients().begin(), d_.coefficients().end());
  }

  const Polynomial& modulus() const noexcept { return d_; }

  int operator()(const Polynomial& f) const {
    if (f.modulus() != d_.modulus()) throw ModulusMismatch();
    return eval_residues(f.coefficients());
  }

  /// f given as normalized residues in ascending order.
  int eval_residues(std::span<const residue_t> f) const {
    return detail::jacobi_raw(std::vector<residue_t>(f.begin(), f.end()), modulus_residues_,
                              d_.modulus());
  }

 private:
  Polynomial d_;
  std::vector<residue_t> modulus_residues_;
};

/// Jacobi symbol (f/D) by the reciprocity ladder.
inline int jacobi(const Polynomial& d, const Polynomial& f) { return QuadraticCharacter(d)(f); }

/// Jacobi symbol (f/D) by trial-division factorization of D and Euler's
/// criterion f^((|P|-1)/2) mod P in each factor.
inline int jacobi_oracle(const Polynomial& d, const Polynomial& f) {
  if (d.modulus() != f.modulus()) throw ModulusMismatch();
  if (d.degree() < 1) throw std::invalid_argument("character modulus must be non-constant");
  if (!d.is_monic()) throw std::invalid_argument("character modulus must be monic");
  if (!is_squarefree(d)) throw std::invalid_argument("character modulus must be squarefree");

  const residue_t p = d.modulus();
  const Polynomial one = Polynomial::constant(p, 1);
  const Polynomial minus_one = Polynomial::constant(p, p - 1);
  int result = 1;
  for (const Polynomial& factor : monic_factors(d)) {
    std::uint64_t size = 1;
    for (int i = 0; i < factor.degree(); ++i) size *= p;
    const Polynomial r = f.powmod((size - 1) / 2, factor);
    if (r.is_zero()) return 0;
    if (r == minus_one) {
      result = -result;
    } else if (!(r == one)) {
      throw std::logic_error("Euler criterion produced a non-unit residue");
    }
  }
  return result;
}

}  // namespace dbn

#endif  // DBN_CHARACTER_HPP
