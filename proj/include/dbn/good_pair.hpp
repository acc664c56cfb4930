#ifndef DBN_GOOD_PAIR_HPP
#define DBN_GOOD_PAIR_HPP

#include <stdexcept>
#include <string>

#include "dbn/polynomial.hpp"

namespace dbn {

struct GoodPairCheck {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// (q, D) is admissible when D is monic, squarefree, of odd degree >= 3.
inline GoodPairCheck good_pair_check(const Polynomial& d) {
  if (d.is_zero()) return {false, "polynomial is zero"};
  if (d.degree() < 3 || d.degree() % 2 == 0) return {false, "degree must be odd and >= 3"};
  if (!d.is_monic()) return {false, "polynomial must be monic"};
  if (!is_squarefree(d)) return {false, "polynomial must be squarefree"};
  return {true, {}};
}

class NotAGoodPair : public std::invalid_argument {
 public:
  explicit NotAGoodPair(const std::string& reason) : std::invalid_argument(reason) {}
};

inline void require_good_pair(const Polynomial& d) {
  if (auto check = good_pair_check(d); !check) throw NotAGoodPair(check.reason);
}

}  // namespace dbn

#endif  // DBN_GOOD_PAIR_HPP
