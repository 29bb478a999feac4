#include <chrono>
#include <stdexcept>

#include "mincodes/kernels.hpp"
#include "mincodes/search.hpp"

namespace mincodes {

std::uint64_t count_right_angles(const std::vector<std::uint64_t>& points, std::size_t words) {
  return kernels::parallel::count_right_angles(points, words);
}

bool code_is_acute(const LinearCode& code, const EnumerationLimits& limits) {
  if (code.q() != 2) throw std::invalid_argument("acute sets are defined for binary codes");
  check_enumeration_budget(code, limits);
  // A right angle at z between b and c is a pair of nonzero codewords b - z, c - z with
  // disjoint supports.
  return !kernels::parallel::has_disjoint_pair(kernels::build_support_table(code));
}

namespace {

bool acute_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return ((a ^ b) & (c ^ b)) && ((b ^ a) & (c ^ a)) && ((a ^ c) & (b ^ c));
}

class AcuteSearch {
 public:
  AcuteSearch(std::size_t d, const SearchBudget& budget) : d_(d), budget_(budget) {}

  AcuteResult run() {
    start_ = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t p = 1; p < (std::uint64_t{1} << d_); ++p) candidates.push_back(p);
    set_.push_back(0);
    best_ = set_;
    extend(candidates);
    AcuteResult r;
    r.d = d_;
    r.points = best_;
    r.proven = !aborted_;
    r.nodes = nodes_;
    return r;
  }

 private:
  void extend(const std::vector<std::uint64_t>& candidates) {
    if (aborted_) return;
    ++nodes_;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) aborted_ = true;
    if (budget_.max_seconds > 0 && (nodes_ & 4095) == 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() >
            budget_.max_seconds)
      aborted_ = true;
    if (set_.size() > best_.size()) best_ = set_;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (set_.size() + (candidates.size() - i) <= best_.size() || aborted_) return;
      const std::uint64_t p = candidates[i];
      std::vector<std::uint64_t> next;
      next.reserve(candidates.size() - i);
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        const std::uint64_t c = candidates[j];
        bool ok = true;
        for (std::size_t s = 0; s < set_.size() && ok; ++s) ok = acute_triple(set_[s], p, c);
        if (ok) next.push_back(c);
      }
      set_.push_back(p);
      extend(next);
      set_.pop_back();
    }
  }

  std::size_t d_;
  const SearchBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::uint64_t> set_;
  std::vector<std::uint64_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

AcuteResult max_acute_set(std::size_t d, const SearchBudget& budget) {
  if (d == 0 || d > 16) throw std::invalid_argument("acute set search supports 1 <= d <= 16");
  return AcuteSearch(d, budget).run();
}

std::vector<std::vector<Symbol>> parse_point_set(std::string_view text) {
  std::vector<std::vector<Symbol>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    std::vector<Symbol> point;
    for (std::size_t c = 0; c < line.size(); ++c) {
      const char ch = line[c];
      if (ch == '#') break;
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (ch != '0' && ch != '1')
        throw ParseError(std::string("expected 0 or 1, got '") + ch + "'", line_no, c + 1);
      point.push_back(static_cast<Symbol>(ch - '0'));
    }
    if (point.empty()) continue;
    if (!out.empty() && point.size() != out.front().size())
      throw ParseError("point has a different dimension", line_no, 1);
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace mincodes
