#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mincodes/code.hpp"

namespace mincodes {

/// One embedded generator matrix with the parameters claimed for it.
struct CorpusEntry {
  std::string id;
  std::string file;
  int q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> expected_d;
  std::optional<std::map<std::size_t, BigInt>> expected_we;
  std::optional<std::size_t> expected_delta;
  std::optional<std::size_t> expected_wmax;
  std::optional<bool> expected_minimal;  ///< empty: no claim
  std::string anchor_section;
  std::string anchor_quote;
  std::vector<std::string> unchecked_notes;
  /// "" or "drop-zero-columns".
  std::string normalize;
  /// Set when a mismatch is a documented misprint rather than a transcription error.
  std::optional<std::string> erratum;
  std::string matrix_text;
};

const std::vector<CorpusEntry>& corpus_entries();
/// Throws std::out_of_range for an unknown id.
const CorpusEntry& corpus_entry(const std::string& id);

/// The entry's matrix parsed strictly, then normalized.
LinearCode load_entry_code(const CorpusEntry& entry);

/// Shell-style pattern match (*, ?, [...]).
bool glob_match(const std::string& pattern, const std::string& text);

struct PropertyCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

enum class EntryStatus { pass, mismatch, erratum, skipped };
std::string to_string(EntryStatus s);

struct EntryReport {
  std::string id;
  EntryStatus status = EntryStatus::pass;
  std::string note;
  std::vector<PropertyCheck> checks;
  double seconds = 0;
};

struct VerifyOptions {
  /// Entries with q^k above this are skipped.
  std::uint64_t max_codewords = std::uint64_t{1} << 26;
};

/// Recomputes n, k, weight enumerator, minimum distance, divisibility, w_max, minimality
/// (geometric oracle) and the minimal-code bounds, and compares with the entry's claims.
EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& options = {});

enum class Tier { fast, all };
/// q^k cap of a tier: 2^20 or 2^26.
std::uint64_t tier_limit(Tier tier);

struct CorpusSummary {
  std::vector<EntryReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errata = 0;
  std::size_t skipped = 0;

  bool ok() const { return failed == 0; }
};

CorpusSummary verify_all(const std::string& filter = "*", Tier tier = Tier::fast);

/// An exact value or a range lo..hi for m(k,q;Delta).
struct LengthValue {
  std::size_t k;
  int q;
  std::size_t delta;
  std::size_t lo;
  std::size_t hi;
};

/// Exact values of m(k,q;Delta) for q in {2,3}.
const std::vector<LengthValue>& divisible_length_table();
/// Bounds on m(k,2) for k <= 17.
const std::vector<LengthValue>& binary_length_table();

}  // namespace mincodes
