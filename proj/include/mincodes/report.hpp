#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "mincodes/corpus.hpp"
#include "mincodes/minimal.hpp"
#include "mincodes/search.hpp"

namespace mincodes {

enum class Oracle { support, geometric, both };
Oracle parse_oracle(const std::string& name);

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t k = 0;
  int q = 2;
  std::size_t min_distance = 0;
  WeightEnumerator weight_enumerator{1, 1, 2, {1, 1}};
  std::size_t divisibility = 0;
  Oracle oracle = Oracle::geometric;
  std::optional<bool> minimal_support;
  std::optional<bool> minimal_geometric;
  bool ashikhmin_barg = false;
  BoundsReport bounds;
  double seconds = 0;

  /// The oracles' verdict; throws std::logic_error if they disagree.
  bool minimal() const;
};

AnalysisReport analyze(const LinearCode& code, Oracle oracle,
                       const EnumerationLimits& limits = EnumerationLimits::from_env());

nlohmann::json to_json(const WeightEnumerator& we);
nlohmann::json to_json(const BoundsReport& b);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const LengthVerdict& v);
nlohmann::json to_json(const EntryReport& r);
nlohmann::json to_json(const CorpusSummary& s);
nlohmann::json to_json(const AcuteResult& r);

/// Human-readable rendering of the same values as to_json.
std::string pretty(const AnalysisReport& r);

}  // namespace mincodes
