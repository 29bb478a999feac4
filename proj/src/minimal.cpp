#include "mincodes/minimal.hpp"

#include <numeric>

#include "mincodes/geometry.hpp"
#include "mincodes/kernels.hpp"

namespace mincodes {

bool is_minimal_support(const LinearCode& code, std::uint64_t limit) {
  if (code.size() > limit)
    throw BudgetExceeded("q^k", code.size(), limit, "use the geometric oracle");
  if (code.k() == 1) return true;
  const auto table = kernels::build_support_table(code);
  // Binary nested supports differ by a codeword of weight wt(c) - wt(b) >= d.
  const std::size_t gap = code.q() == 2 && table.size() ? table.weights.front() : 1;
  return !kernels::parallel::has_nested_support(table, gap);
}

bool is_minimal_geometric(const LinearCode& code, std::uint64_t max_hyperplanes) {
  std::uint64_t hyperplanes = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    hyperplanes += power;
    if (hyperplanes > max_hyperplanes)
      throw BudgetExceeded("hyperplanes", hyperplanes, max_hyperplanes);
    power *= static_cast<std::uint64_t>(code.q());
  }
  return is_strong_blocking(code_to_multiset(code));
}

std::size_t divisibility(const WeightEnumerator& we) {
  std::size_t g = 0;
  for (auto w : we.nonzero_weights()) g = std::gcd(g, w);
  return g;
}

std::size_t divisibility(const LinearCode& code, const EnumerationLimits& limits) {
  return divisibility(weight_enumerator(code, limits));
}

bool ashikhmin_barg(const WeightEnumerator& we) {
  const auto q = static_cast<std::size_t>(we.q());
  return q * we.min_weight() > (q - 1) * we.max_weight();
}

bool ashikhmin_barg(const LinearCode& code, const EnumerationLimits& limits) {
  return ashikhmin_barg(weight_enumerator(code, limits));
}

std::size_t griesmer_bound(std::size_t k, std::size_t d, int q) {
  if (d == 0) return 0;
  std::size_t total = 0;
  std::size_t power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += (d + power - 1) / power;
    if (power > d) {
      total += k - i - 1;  // every later term is 1
      break;
    }
    power *= static_cast<std::size_t>(q);
  }
  return total;
}

BoundsReport bounds_report(const WeightEnumerator& we, bool assume_minimal) {
  const std::size_t n = we.n(), k = we.k();
  const auto q = static_cast<std::size_t>(we.q());
  BoundsReport r;
  r.assume_minimal = assume_minimal;
  r.length_lb = (q + 1) * (k - 1);
  r.wmin_lb = (k - 1) * (q - 1) + 1;
  r.wmax_ub = n - k + 1;
  r.d = we.min_weight();
  r.w_max = we.max_weight();
  r.griesmer_lb = griesmer_bound(k, r.d, we.q());
  r.length_ok = n >= r.length_lb;
  r.wmin_ok = r.d >= r.wmin_lb;
  r.wmax_ok = r.w_max <= r.wmax_ub;
  r.griesmer_ok = n >= r.griesmer_lb;
  return r;
}

BoundsReport bounds_report(const LinearCode& code, bool assume_minimal,
                           const EnumerationLimits& limits) {
  return bounds_report(weight_enumerator(code, limits), assume_minimal);
}

}  // namespace mincodes
