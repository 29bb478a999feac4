#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mincodes/code.hpp"

namespace mincodes {

struct SearchParams {
  std::size_t k = 0;
  int q = 2;
  std::size_t delta = 1;
  std::size_t n_max = 0;
  /// Skip lengths below the Griesmer bound at the smallest admissible distance. When off, every
  /// length from k upward is searched.
  bool griesmer_prune = true;
};

/// Zero means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
};

enum class SearchStatus { found, exhausted, budget_exhausted };
std::string to_string(SearchStatus s);

/// How one length was settled.
struct LengthOutcome {
  std::size_t n = 0;
  std::string method;  ///< "bound", "search", "found", "budget"
  std::uint64_t nodes = 0;
};

struct SearchResult {
  SearchParams params;
  SearchStatus status = SearchStatus::exhausted;
  std::optional<std::size_t> found_length;
  /// Largest n such that no qualifying code of length <= n exists.
  std::size_t exhausted_up_to = 0;
  std::uint64_t node_count = 0;
  std::optional<Matrix> witness;
  std::vector<LengthOutcome> lengths;
  double seconds = 0;
};

using ProgressFn = std::function<void(const LengthOutcome&)>;

/// Smallest n <= n_max admitting a Delta-divisible minimal [n,k]_q code. Lengths are tried in
/// increasing order; each is either excluded by the Griesmer bound at the smallest admissible
/// distance or settled by a depth-first search over column multisets containing the unit
/// vectors. Deterministic for any thread count when no budget is hit.
SearchResult search_min_length(const SearchParams& params, const SearchBudget& budget = {},
                               const ProgressFn& progress = {});

struct LengthVerdict {
  bool upper_verified = false;
  bool lower_verified = false;
  std::string witness_source;  ///< "construction: ...", "corpus: id", "search"
  std::string lower_note;
  std::optional<SearchResult> search;
};

/// Checks a claimed m(k,q;Delta). The upper bound needs a witness from a construction or the
/// corpus; the lower bound is attempted by search for (k <= 4, q = 2) and (k <= 3, q = 3,
/// Delta <= 3). Throws std::runtime_error naming the property when a witness fails.
LengthVerdict verify_length_value(std::size_t k, int q, std::size_t delta, std::size_t claimed,
                                  const SearchBudget& budget = {});

/// Triples (b, z, c), {b, c} unordered, with (b - z).(c - z) = 0. Points are packed 0/1
/// vectors with `words` words each.
std::uint64_t count_right_angles(const std::vector<std::uint64_t>& points, std::size_t words);

/// Codeword set of a binary code is acute. Equivalent to no two nonzero codewords having
/// disjoint supports, which is how it is evaluated.
bool code_is_acute(const LinearCode& code,
                   const EnumerationLimits& limits = EnumerationLimits::from_env());

struct AcuteResult {
  std::size_t d = 0;
  std::vector<std::uint64_t> points;  ///< bit i = coordinate i
  bool proven = false;                ///< search completed within budget
  std::uint64_t nodes = 0;
};

/// Largest acute subset of {0,1}^d (d <= 16) by branch and bound, containing 0 by translation
/// symmetry.
AcuteResult max_acute_set(std::size_t d, const SearchBudget& budget = {});

/// Reads one 0/1 vector per line; blank lines and '#' comments skipped.
std::vector<std::vector<Symbol>> parse_point_set(std::string_view text);

}  // namespace mincodes
