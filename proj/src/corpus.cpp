#include "mincodes/corpus.hpp"

#include <fnmatch.h>

#include <chrono>
#include <cstring>
#include <json.hpp>
#include <stdexcept>

#include "corpus_data.hpp"
#include "mincodes/minimal.hpp"

namespace mincodes {

namespace {

std::vector<CorpusEntry> load_manifest() {
  const auto doc = nlohmann::json::parse(corpus_data::kManifest);
  std::vector<CorpusEntry> out;
  for (const auto& e : doc.at("entries")) {
    CorpusEntry c;
    c.id = e.at("id").get<std::string>();
    c.file = e.at("file").get<std::string>();
    c.q = e.at("q").get<int>();
    c.n = e.at("n").get<std::size_t>();
    c.k = e.at("k").get<std::size_t>();
    if (e.contains("expected_d")) c.expected_d = e["expected_d"].get<std::size_t>();
    if (e.contains("expected_delta")) c.expected_delta = e["expected_delta"].get<std::size_t>();
    if (e.contains("expected_wmax")) c.expected_wmax = e["expected_wmax"].get<std::size_t>();
    if (e.contains("expected_we")) {
      std::map<std::size_t, BigInt> we;
      for (const auto& [w, count] : e["expected_we"].items())
        we[std::stoul(w)] = BigInt(count.get<std::uint64_t>());
      c.expected_we = std::move(we);
    }
    if (e.contains("expected_minimal") && !e["expected_minimal"].is_null())
      c.expected_minimal = e["expected_minimal"].get<bool>();
    if (e.contains("anchor")) {
      c.anchor_section = e["anchor"].value("section", "");
      c.anchor_quote = e["anchor"].value("quote", "");
    }
    if (e.contains("unchecked_notes"))
      c.unchecked_notes = e["unchecked_notes"].get<std::vector<std::string>>();
    c.normalize = e.value("normalize", "");
    if (e.contains("erratum")) c.erratum = e["erratum"].get<std::string>();
    bool found = false;
    for (std::size_t i = 0; i < corpus_data::kFileCount; ++i) {
      if (c.file == corpus_data::kFiles[i].name) {
        c.matrix_text = corpus_data::kFiles[i].text;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("corpus file missing: " + c.file);
    out.push_back(std::move(c));
  }
  return out;
}

std::string we_string(const std::map<std::size_t, BigInt>& we) {
  std::string out;
  for (const auto& [w, c] : we) {
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (w == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str();
    out += w == 1 ? "x" : "x^" + std::to_string(w);
  }
  return out;
}

void add_check(EntryReport& r, std::string name, const std::string& expected,
               const std::string& actual) {
  r.checks.push_back({std::move(name), expected, actual, expected == actual});
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = load_manifest();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
  for (const auto& e : corpus_entries())
    if (e.id == id) return e;
  throw std::out_of_range("no corpus entry '" + id + "'");
}

LinearCode load_entry_code(const CorpusEntry& entry) {
  LinearCode code = parse_code(entry.matrix_text, entry.q);
  if (entry.normalize == "drop-zero-columns") return drop_zero_columns(code);
  if (!entry.normalize.empty())
    throw std::runtime_error("unknown normalization '" + entry.normalize + "'");
  return code;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

std::string to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::pass: return "pass";
    case EntryStatus::mismatch: return "mismatch";
    case EntryStatus::erratum: return "erratum";
    case EntryStatus::skipped: return "skipped";
  }
  return "?";
}

EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  EntryReport r;
  r.id = entry.id;
  std::optional<LinearCode> parsed;
  try {
    parsed = load_entry_code(entry);
  } catch (const std::exception& e) {
    add_check(r, "parse", "ok", e.what());
  }
  if (parsed) {
    const LinearCode& code = *parsed;
    add_check(r, "n", std::to_string(entry.n), std::to_string(code.n()));
    add_check(r, "k", std::to_string(entry.k), std::to_string(code.k()));
    if (code.size() > options.max_codewords) {
      r.status = EntryStatus::skipped;
      r.note = "q^k exceeds the tier limit";
      r.checks.clear();
      return r;
    }
    EnumerationLimits limits;
    limits.max_codewords = options.max_codewords;
    const WeightEnumerator we = weight_enumerator(code, limits);
    if (entry.expected_we) {
      std::map<std::size_t, BigInt> actual;
      for (std::size_t w = 0; w <= we.n(); ++w)
        if (we[w] != 0) actual[w] = we[w];
      add_check(r, "weight_enumerator", we_string(*entry.expected_we), we_string(actual));
    }
    if (entry.expected_d) add_check(r, "min_distance", std::to_string(*entry.expected_d), std::to_string(we.min_weight()));
    if (entry.expected_delta)
      add_check(r, "divisibility", std::to_string(*entry.expected_delta), std::to_string(divisibility(we)));
    if (entry.expected_wmax)
      add_check(r, "max_weight", std::to_string(*entry.expected_wmax), std::to_string(we.max_weight()));
    if (entry.expected_minimal) {
      add_check(r, "minimal", flag(*entry.expected_minimal), flag(is_minimal_geometric(drop_zero_columns(code))));
      if (*entry.expected_minimal) {
        const auto b = bounds_report(we, true);
        add_check(r, "bound_length", ">= " + std::to_string(b.length_lb), b.length_ok ? ">= " + std::to_string(b.length_lb) : std::to_string(code.n()));
        add_check(r, "bound_wmin", ">= " + std::to_string(b.wmin_lb), b.wmin_ok ? ">= " + std::to_string(b.wmin_lb) : std::to_string(b.d));
        add_check(r, "bound_wmax", "<= " + std::to_string(b.wmax_ub), b.wmax_ok ? "<= " + std::to_string(b.wmax_ub) : std::to_string(b.w_max));
      }
    }
    const auto b = bounds_report(we, false);
    add_check(r, "griesmer", ">= " + std::to_string(b.griesmer_lb), b.griesmer_ok ? ">= " + std::to_string(b.griesmer_lb) : std::to_string(code.n()));
  }
  bool ok = true;
  for (const auto& c : r.checks) ok = ok && c.passed;
  if (!ok) {
    r.status = entry.erratum ? EntryStatus::erratum : EntryStatus::mismatch;
    if (entry.erratum) r.note = *entry.erratum;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::uint64_t tier_limit(Tier tier) {
  return tier == Tier::fast ? std::uint64_t{1} << 20 : std::uint64_t{1} << 26;
}

CorpusSummary verify_all(const std::string& filter, Tier tier) {
  CorpusSummary s;
  VerifyOptions options;
  options.max_codewords = tier_limit(tier);
  for (const auto& entry : corpus_entries()) {
    if (!glob_match(filter, entry.id)) continue;
    auto report = verify_entry(entry, options);
    switch (report.status) {
      case EntryStatus::pass: ++s.passed; break;
      case EntryStatus::mismatch: ++s.failed; break;
      case EntryStatus::erratum: ++s.errata; break;
      case EntryStatus::skipped: ++s.skipped; break;
    }
    s.reports.push_back(std::move(report));
  }
  return s;
}

const std::vector<LengthValue>& divisible_length_table() {
  static const std::vector<LengthValue> table = [] {
    struct Row {
      std::size_t k;
      int q;
      std::size_t delta;
      std::size_t value;
    };
    const Row rows[] = {
        {4, 2, 1, 9},    {4, 2, 2, 9},    {5, 2, 1, 13},   {5, 2, 2, 14},   {5, 2, 4, 17},
        {6, 2, 1, 15},   {6, 2, 2, 15},   {6, 2, 4, 18},   {6, 2, 8, 36},   {7, 2, 1, 20},
        {7, 2, 2, 21},   {7, 2, 4, 26},   {7, 2, 8, 42},   {7, 2, 16, 84},  {8, 2, 1, 24},
        {8, 2, 2, 24},   {8, 2, 4, 29},   {8, 2, 8, 45},   {8, 2, 16, 90},  {8, 2, 32, 174},
        {9, 2, 1, 26},   {9, 2, 2, 27},   {9, 2, 4, 30},   {9, 2, 8, 58},   {9, 2, 16, 96},
        {9, 2, 32, 192}, {9, 2, 64, 384}, {10, 2, 4, 31},  {10, 2, 8, 60},  {10, 2, 16, 93},
        {10, 2, 32, 186}, {10, 2, 64, 366}, {3, 3, 1, 9},  {3, 3, 3, 12},   {4, 3, 1, 14},
        {4, 3, 3, 15},   {4, 3, 9, 38},   {5, 3, 1, 19},   {5, 3, 3, 19},   {5, 3, 9, 48},
        {5, 3, 27, 116},
    };
    std::vector<LengthValue> out;
    for (const auto& r : rows) out.push_back({r.k, r.q, r.delta, r.value, r.value});
    return out;
  }();
  return table;
}

const std::vector<LengthValue>& binary_length_table() {
  static const std::vector<LengthValue> table = {
      {1, 2, 1, 1, 1},    {2, 2, 1, 3, 3},    {3, 2, 1, 6, 6},    {4, 2, 1, 9, 9},
      {5, 2, 1, 13, 13},  {6, 2, 1, 15, 15},  {7, 2, 1, 20, 20},  {8, 2, 1, 24, 24},
      {9, 2, 1, 26, 26},  {10, 2, 1, 28, 29}, {11, 2, 1, 31, 35}, {12, 2, 1, 34, 38},
      {13, 2, 1, 39, 43}, {14, 2, 1, 41, 48}, {15, 2, 1, 45, 52}, {16, 2, 1, 47, 56},
      {17, 2, 1, 51, 62},
  };
  return table;
}

}  // namespace mincodes
