#pragma once

#include <cstddef>
#include <cstdint>

#include "mincodes/code.hpp"

namespace mincodes {

/// Default q^k cap for the quadratic support oracle.
inline constexpr std::uint64_t kSupportOracleLimit = std::uint64_t{1} << 17;

/// No nonzero support properly contains another. For q > 2 one codeword per scalar class is
/// compared. Throws BudgetExceeded above `limit` codewords.
bool is_minimal_support(const LinearCode& code, std::uint64_t limit = kSupportOracleLimit);

/// The column multiset is strong blocking. Throws BudgetExceeded when the hyperplane count
/// exceeds `max_hyperplanes`, std::invalid_argument for a zero column.
bool is_minimal_geometric(const LinearCode& code,
                          std::uint64_t max_hyperplanes = std::uint64_t{1} << 26);

/// gcd of the nonzero weights (0 for a code without nonzero words).
std::size_t divisibility(const WeightEnumerator& we);
std::size_t divisibility(const LinearCode& code,
                         const EnumerationLimits& limits = EnumerationLimits::from_env());

/// q * w_min > (q - 1) * w_max.
bool ashikhmin_barg(const WeightEnumerator& we);
bool ashikhmin_barg(const LinearCode& code,
                    const EnumerationLimits& limits = EnumerationLimits::from_env());

/// sum_{i < k} ceil(d / q^i).
std::size_t griesmer_bound(std::size_t k, std::size_t d, int q);

struct BoundsReport {
  std::size_t length_lb = 0;  ///< (q + 1)(k - 1)
  std::size_t wmin_lb = 0;    ///< (k - 1)(q - 1) + 1
  std::size_t wmax_ub = 0;    ///< n - k + 1
  std::size_t griesmer_lb = 0;
  std::size_t d = 0;
  std::size_t w_max = 0;
  bool length_ok = false;
  bool wmin_ok = false;
  bool wmax_ok = false;
  bool griesmer_ok = false;
  /// With assume_minimal, a failed minimal-code bound certifies that the code is not minimal.
  bool assume_minimal = false;

  bool minimal_bounds_ok() const { return length_ok && wmin_ok && wmax_ok; }
};

BoundsReport bounds_report(const WeightEnumerator& we, bool assume_minimal);
BoundsReport bounds_report(const LinearCode& code, bool assume_minimal,
                           const EnumerationLimits& limits = EnumerationLimits::from_env());

}  // namespace mincodes
