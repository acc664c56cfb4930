#ifndef DBN_REFERENCE_TABLE_HPP
#define DBN_REFERENCE_TABLE_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace dbn {

/// One discriminant over F_3 per genus 1..7 whose double-zero bound sits
/// close to 0. Coefficients ascending.
struct ReferenceRow {
  int genus;
  std::vector<std::int64_t> d;
};

inline const std::array<ReferenceRow, 7>& reference_f3_rows() {
  static const std::array<ReferenceRow, 7> rows{{
      {1, {1, 2, 0, 1}},                                        // T^3+2T+1
      {2, {1, 1, 0, 1, 0, 1}},                                  // T^5+T^3+T+1
      {3, {2, 2, 2, 1, 0, 2, 0, 1}},                            // T^7+2T^5+T^3+2T^2+2T+2
      {4, {1, 1, 1, 1, 1, 0, 1, 0, 0, 1}},                      // T^9+T^6+T^4+T^3+T^2+T+1
      {5, {1, 2, 1, 0, 2, 2, 2, 2, 1, 2, 0, 1}},                // T^11+2T^9+T^8+2T^7+2T^6+2T^5+2T^4+T^2+2T+1
      {6, {1, 2, 0, 1, 2, 0, 2, 2, 0, 0, 1, 2, 0, 1}},          // T^13+2T^11+T^10+2T^7+2T^6+2T^4+T^3+2T+1
      {7, {2, 1, 2, 1, 0, 0, 2, 0, 1, 2, 0, 0, 0, 0, 2, 1}},    // T^15+2T^14+2T^9+T^8+2T^6+T^3+2T^2+T+2
  }};
  return rows;
}

}  // namespace dbn

#endif  // DBN_REFERENCE_TABLE_HPP
