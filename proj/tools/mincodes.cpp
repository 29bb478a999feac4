// Command-line front end: analysis, constructions, search, acute sets, corpus verification.
//
// Exit codes: 0 success, 1 property failure, 2 usage error, 3 budget exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mincodes/construct.hpp"
#include "mincodes/corpus.hpp"
#include "mincodes/geometry.hpp"
#include "mincodes/kernels.hpp"
#include "mincodes/minimal.hpp"
#include "mincodes/report.hpp"
#include "mincodes/search.hpp"

using namespace mincodes;

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kBudget = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

void print_matrix(const LinearCode& code, bool as_json) {
  if (as_json) {
    auto rows = nlohmann::json::array();
    std::istringstream lines(format_matrix(code.generator()));
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    emit({{"n", code.n()}, {"k", code.k()}, {"q", code.q()}, {"generator", rows}});
  } else {
    std::cout << "# [" << code.n() << "," << code.k() << "]_" << code.q() << "\n"
              << format_matrix(code.generator());
  }
}

std::vector<Symbol> parse_point_arg(const std::string& s, int q) {
  std::vector<Symbol> out;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    if (c < '0' || c - '0' >= q) throw std::invalid_argument("bad point coordinate '" + std::string(1, c) + "'");
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal and divisible linear codes over GF(2), GF(3), GF(4)"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: all cores)");

  // Shared by the matrix-file subcommands.
  std::string file;
  int q = 2;
  bool pretty_out = false;
  bool reduce_rank = false;
  std::string oracle_name = "geometric";
  std::uint64_t max_codewords = EnumerationLimits::from_env().max_codewords;
  auto add_code_args = [&](CLI::App* sub) {
    sub->add_option("file", file, "Generator matrix text file")->required();
    sub->add_option("--q", q, "Field size")->check(CLI::IsMember({2, 3, 4}));
    sub->add_flag("--reduce", reduce_rank, "Accept dependent rows by reducing to a basis");
    sub->add_option("--max-codewords", max_codewords, "Enumeration cap on q^k");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Full JSON analysis of a generator matrix");
  add_code_args(analyze_cmd);
  analyze_cmd->add_flag("--pretty", pretty_out, "Human-readable table");
  analyze_cmd->add_option("--oracle", oracle_name, "support|geometric|both")
      ->check(CLI::IsMember({"support", "geometric", "both"}));

  auto* minimal_cmd = app.add_subcommand("minimal", "Minimality test");
  add_code_args(minimal_cmd);
  minimal_cmd->add_option("--oracle", oracle_name, "support|geometric|both")
      ->check(CLI::IsMember({"support", "geometric", "both"}));

  auto* div_cmd = app.add_subcommand("divisibility", "Largest common divisor of all weights");
  add_code_args(div_cmd);

  bool assume_minimal = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Minimal-code and Griesmer bounds");
  add_code_args(bounds_cmd);
  bounds_cmd->add_flag("--assume-minimal", assume_minimal, "Read violations as non-minimality");

  std::string project_point;
  bool reduce_set = false;
  auto* multiset_cmd = app.add_subcommand("multiset", "Column multiset in PG(k-1,q) as JSON");
  add_code_args(multiset_cmd);
  multiset_cmd->add_option("--project", project_point, "Project through this point, e.g. 1,0,1");
  multiset_cmd->add_flag("--reduce-to-set", reduce_set, "Clamp multiplicities to one");

  auto* construct_cmd = app.add_subcommand("construct", "Print a constructed generator matrix");
  construct_cmd->require_subcommand(1);
  bool construct_json = false;
  construct_cmd->add_flag("--json", construct_json, "JSON output");
  std::size_t ck = 3, ct = 2;
  int cq = 2;
  std::string spec_path;
  auto* simplex_cmd = construct_cmd->add_subcommand("simplex", "Simplex code");
  simplex_cmd->add_option("--k", ck)->required();
  simplex_cmd->add_option("--q", cq)->check(CLI::IsMember({2, 3, 4}));
  auto* su2_cmd = construct_cmd->add_subcommand("su2", "Three disjoint t-spaces in PG(2t-1,2)");
  su2_cmd->add_option("--t", ct)->required();
  auto* circ_cmd = construct_cmd->add_subcommand("circulant", "Generalized circulant from JSON");
  for (auto* sub : {simplex_cmd, su2_cmd, circ_cmd}) sub->fallthrough();
  circ_cmd->add_option("--spec", spec_path)->required()->check(CLI::ExistingFile);

  SearchParams sp;
  sp.k = 3;
  sp.n_max = 0;
  SearchBudget budget;
  bool no_griesmer = false;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for m(k,q;delta)");
  search_cmd->add_option("--k", sp.k)->required();
  search_cmd->add_option("--q", sp.q)->check(CLI::IsMember({2, 3, 4}));
  search_cmd->add_option("--delta", sp.delta);
  search_cmd->add_option("--n-max", sp.n_max, "Largest length tried (default: simplex length x delta)");
  search_cmd->add_option("--budget-nodes", budget.max_nodes);
  search_cmd->add_option("--budget-seconds", budget.max_seconds);
  search_cmd->add_flag("--no-griesmer", no_griesmer, "Search every length from k upward");

  std::size_t vk = 0, vdelta = 1, vclaimed = 0;
  int vq = 2;
  auto* vlen_cmd = app.add_subcommand("verify-length", "Check a claimed value of m(k,q;delta)");
  vlen_cmd->add_option("--k", vk)->required();
  vlen_cmd->add_option("--q", vq)->check(CLI::IsMember({2, 3, 4}));
  vlen_cmd->add_option("--delta", vdelta);
  vlen_cmd->add_option("--claimed", vclaimed)->required();
  vlen_cmd->add_option("--budget-nodes", budget.max_nodes);
  vlen_cmd->add_option("--budget-seconds", budget.max_seconds);

  std::size_t acute_d = 0;
  std::string acute_check;
  auto* acute_cmd = app.add_subcommand("acute", "Acute sets in {0,1}^d");
  auto* d_opt = acute_cmd->add_option("--d", acute_d, "Search for a largest acute set");
  auto* check_opt = acute_cmd->add_option("--check", acute_check, "Point-set file to test")
                        ->check(CLI::ExistingFile);
  d_opt->excludes(check_opt);
  acute_cmd->add_option("--budget-nodes", budget.max_nodes);
  acute_cmd->add_option("--budget-seconds", budget.max_seconds);

  std::string filter = "*";
  std::string tier_name = "fast";
  auto* corpus_cmd = app.add_subcommand("verify-corpus", "Recheck every embedded matrix");
  corpus_cmd->add_option("--filter", filter, "Glob over entry ids");
  corpus_cmd->add_option("--tier", tier_name)->check(CLI::IsMember({"fast", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (threads > 0) kernels::set_thread_count(threads);
    EnumerationLimits limits;
    limits.max_codewords = max_codewords;
    auto load = [&] {
      return parse_code(read_file(file), q, reduce_rank ? RankPolicy::reduce : RankPolicy::strict);
    };

    if (*analyze_cmd) {
      const auto report = analyze(load(), parse_oracle(oracle_name), limits);
      if (pretty_out)
        std::cout << pretty(report);
      else
        emit(to_json(report));
      return kOk;
    }
    if (*minimal_cmd) {
      const auto code = load();
      const Oracle o = parse_oracle(oracle_name);
      nlohmann::json j = {{"oracle", oracle_name}};
      std::optional<bool> s, g;
      if (o != Oracle::geometric) j["support"] = *(s = is_minimal_support(code, limits.max_codewords));
      if (o != Oracle::support) j["geometric"] = *(g = is_minimal_geometric(code));
      if (s && g && *s != *g) {
        emit(j);
        std::cerr << "error: the minimality oracles disagree\n";
        return kPropertyFailure;
      }
      j["minimal"] = s ? *s : *g;
      emit(j);
      return kOk;
    }
    if (*div_cmd) {
      const auto we = weight_enumerator(load(), limits);
      emit({{"divisibility", divisibility(we)}, {"weight_enumerator", to_json(we)}});
      return kOk;
    }
    if (*bounds_cmd) {
      emit(to_json(bounds_report(load(), assume_minimal, limits)));
      return kOk;
    }
    if (*multiset_cmd) {
      auto ms = code_to_multiset(load());
      if (!project_point.empty()) ms = project_through_point(ms, parse_point_arg(project_point, q));
      if (reduce_set) ms = reduce_to_set(ms);
      emit({{"k", ms.k()},
            {"q", ms.q()},
            {"cardinality", ms.cardinality()},
            {"spanning", is_spanning(ms)},
            {"strong_blocking", is_strong_blocking(ms)},
            {"points", nlohmann::json::parse(multiset_to_json(ms))}});
      return kOk;
    }
    if (*construct_cmd) {
      if (*simplex_cmd) print_matrix(simplex(ck, cq), construct_json);
      if (*su2_cmd) print_matrix(disjoint_subspaces_code(ct), construct_json);
      if (*circ_cmd) {
        const auto spec = parse_circulant_spec(read_file(spec_path));
        const auto code = generalized_circulant(spec);
        if (construct_json) {
          auto rows = nlohmann::json::array();
          std::istringstream lines(format_matrix(code.generator()));
          for (std::string line; std::getline(lines, line);) rows.push_back(line);
          emit({{"n", code.n()},
                {"k", code.k()},
                {"q", code.q()},
                {"type", spec.type()},
                {"cyclic_symmetry", has_cyclic_symmetry(code, spec.col_sizes)},
                {"generator", rows}});
        } else {
          std::cout << "# type " << spec.type() << "\n";
          print_matrix(code, false);
        }
      }
      return kOk;
    }
    if (*search_cmd) {
      if (sp.n_max == 0) {
        std::size_t len = 1;
        for (std::size_t i = 1; i < sp.k; ++i) len = len * static_cast<std::size_t>(sp.q) + 1;
        sp.n_max = len * sp.delta;
      }
      sp.griesmer_prune = !no_griesmer;
      const auto result = search_min_length(sp, budget, [](const LengthOutcome& o) {
        std::cerr << "n=" << o.n << " " << o.method << " nodes=" << o.nodes << "\n";
      });
      emit(to_json(result));
      return result.status == SearchStatus::budget_exhausted ? kBudget : kOk;
    }
    if (*vlen_cmd) {
      const auto v = verify_length_value(vk, vq, vdelta, vclaimed, budget);
      emit(to_json(v));
      if (!v.upper_verified) return kPropertyFailure;
      if (v.search && v.search->status == SearchStatus::found && !v.lower_verified)
        return kPropertyFailure;
      if (v.search && v.search->status == SearchStatus::budget_exhausted) return kBudget;
      return kOk;
    }
    if (*acute_cmd) {
      if (!acute_check.empty()) {
        const auto pts = parse_point_set(read_file(acute_check));
        if (pts.empty()) throw std::invalid_argument("empty point set");
        const std::size_t d = pts.front().size();
        const std::size_t words = (d + 63) / 64;
        std::vector<std::uint64_t> packed(pts.size() * words, 0);
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (pts[i][j]) packed[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("point set has repeated points");
        const auto angles = count_right_angles(packed, words);
        emit({{"d", d}, {"size", pts.size()}, {"right_angles", angles}, {"acute", angles == 0}});
        return angles == 0 ? kOk : kPropertyFailure;
      }
      if (acute_d == 0) throw std::invalid_argument("acute needs --d or --check");
      const auto r = max_acute_set(acute_d, budget);
      emit(to_json(r));
      return r.proven ? kOk : kBudget;
    }
    if (*corpus_cmd) {
      const auto summary = verify_all(filter, tier_name == "all" ? Tier::all : Tier::fast);
      for (const auto& r : summary.reports) {
        std::cerr << to_string(r.status) << "  " << r.id;
        for (const auto& c : r.checks)
          if (!c.passed) std::cerr << "  [" << c.name << ": expected " << c.expected << ", got " << c.actual << "]";
        std::cerr << "\n";
      }
      emit(to_json(summary));
      return summary.ok() ? kOk : kPropertyFailure;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kPropertyFailure;
  }
  return kUsage;
}
