#include "mincodes/report.hpp"

#include <chrono>
#include <sstream>

namespace mincodes {

namespace {

std::string oracle_name(Oracle o) {
  switch (o) {
    case Oracle::support: return "support";
    case Oracle::geometric: return "geometric";
    case Oracle::both: return "both";
  }
  return "?";
}

nlohmann::json matrix_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string s;
    for (Symbol x : m.row(r)) s += static_cast<char>('0' + x);
    rows.push_back(s);
  }
  return rows;
}

}  // namespace

Oracle parse_oracle(const std::string& name) {
  if (name == "support") return Oracle::support;
  if (name == "geometric") return Oracle::geometric;
  if (name == "both") return Oracle::both;
  throw std::invalid_argument("unknown oracle '" + name + "'");
}

bool AnalysisReport::minimal() const {
  if (minimal_support && minimal_geometric && *minimal_support != *minimal_geometric)
    throw std::logic_error("minimality oracles disagree");
  return minimal_support ? *minimal_support : minimal_geometric.value_or(false);
}

AnalysisReport analyze(const LinearCode& code, Oracle oracle, const EnumerationLimits& limits) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.n = code.n();
  r.k = code.k();
  r.q = code.q();
  r.weight_enumerator = weight_enumerator(code, limits);
  r.min_distance = r.weight_enumerator.min_weight();
  r.divisibility = divisibility(r.weight_enumerator);
  r.oracle = oracle;
  if (oracle != Oracle::geometric) r.minimal_support = is_minimal_support(code);
  if (oracle != Oracle::support) r.minimal_geometric = is_minimal_geometric(code);
  r.ashikhmin_barg = ashikhmin_barg(r.weight_enumerator);
  r.bounds = bounds_report(r.weight_enumerator, r.minimal());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

nlohmann::json to_json(const WeightEnumerator& we) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t w = 0; w <= we.n(); ++w)
    if (we[w] != 0) {
      if (we[w] <= std::numeric_limits<std::uint64_t>::max())
        j[std::to_string(w)] = static_cast<std::uint64_t>(we[w]);
      else
        j[std::to_string(w)] = we[w].str();
    }
  return j;
}

nlohmann::json to_json(const BoundsReport& b) {
  return {{"length_lb", b.length_lb},     {"wmin_lb", b.wmin_lb},
          {"wmax_ub", b.wmax_ub},         {"griesmer_lb", b.griesmer_lb},
          {"d", b.d},                     {"w_max", b.w_max},
          {"assume_minimal", b.assume_minimal},
          {"satisfied",
           {{"length", b.length_ok},
            {"wmin", b.wmin_ok},
            {"wmax", b.wmax_ok},
            {"griesmer", b.griesmer_ok}}}};
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json oracles = nlohmann::json::object();
  if (r.minimal_support) oracles["support"] = *r.minimal_support;
  if (r.minimal_geometric) oracles["geometric"] = *r.minimal_geometric;
  return {{"n", r.n},
          {"k", r.k},
          {"q", r.q},
          {"min_distance", r.min_distance},
          {"weight_enumerator", to_json(r.weight_enumerator)},
          {"divisibility", r.divisibility},
          {"minimal", r.minimal()},
          {"oracle", oracle_name(r.oracle)},
          {"oracles", oracles},
          {"ashikhmin_barg", r.ashikhmin_barg},
          {"bounds", to_json(r.bounds)},
          {"timing", {{"seconds", r.seconds}}}};
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j = {{"k", r.params.k},
                      {"q", r.params.q},
                      {"delta", r.params.delta},
                      {"n_max", r.params.n_max},
                      {"status", to_string(r.status)},
                      {"found_length", nullptr},
                      {"exhausted_up_to", r.exhausted_up_to},
                      {"node_count", r.node_count},
                      {"witness", nullptr},
                      {"seconds", r.seconds}};
  if (r.found_length) j["found_length"] = *r.found_length;
  if (r.witness) j["witness"] = matrix_json(*r.witness);
  auto lengths = nlohmann::json::array();
  for (const auto& l : r.lengths)
    lengths.push_back({{"n", l.n}, {"method", l.method}, {"nodes", l.nodes}});
  j["lengths"] = lengths;
  return j;
}

nlohmann::json to_json(const LengthVerdict& v) {
  nlohmann::json j = {{"upper_verified", v.upper_verified},
                      {"lower_verified", v.lower_verified},
                      {"witness_source", v.witness_source},
                      {"lower_note", v.lower_note}};
  if (v.search) j["search"] = to_json(*v.search);
  return j;
}

nlohmann::json to_json(const EntryReport& r) {
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"property", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
  return {{"id", r.id},
          {"status", to_string(r.status)},
          {"note", r.note},
          {"checks", checks},
          {"seconds", r.seconds}};
}

nlohmann::json to_json(const CorpusSummary& s) {
  auto reports = nlohmann::json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"passed", s.passed},
          {"failed", s.failed},
          {"errata", s.errata},
          {"skipped", s.skipped},
          {"entries", reports}};
}

nlohmann::json to_json(const AcuteResult& r) {
  auto points = nlohmann::json::array();
  for (auto p : r.points) {
    std::string s;
    for (std::size_t i = 0; i < r.d; ++i) s += ((p >> i) & 1) ? '1' : '0';
    points.push_back(s);
  }
  return {{"d", r.d},
          {"size", r.points.size()},
          {"proven", r.proven},
          {"nodes", r.nodes},
          {"points", points}};
}

std::string pretty(const AnalysisReport& r) {
  std::ostringstream out;
  out << "[" << r.n << "," << r.k << "," << r.min_distance << "]_" << r.q << " code\n";
  out << "  weight enumerator  " << r.weight_enumerator.to_string() << "\n";
  out << "  divisibility       " << r.divisibility << "\n";
  out << "  minimal            " << (r.minimal() ? "yes" : "no") << " (" << oracle_name(r.oracle)
      << ")\n";
  out << "  Ashikhmin-Barg     " << (r.ashikhmin_barg ? "yes" : "no") << "\n";
  const auto& b = r.bounds;
  out << "  n >= " << b.length_lb << "          " << (b.length_ok ? "ok" : "violated") << "\n";
  out << "  w_min >= " << b.wmin_lb << "      " << (b.wmin_ok ? "ok" : "violated") << "\n";
  out << "  w_max <= " << b.wmax_ub << "      " << (b.wmax_ok ? "ok" : "violated") << "\n";
  out << "  Griesmer n >= " << b.griesmer_lb << " " << (b.griesmer_ok ? "ok" : "violated") << "\n";
  out << "  time               " << r.seconds << " s\n";
  return out.str();
}

}  // namespace mincodes
