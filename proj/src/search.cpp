#include "mincodes/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#include "basis_detail.hpp"
#include "kernels_detail.hpp"
#include "mincodes/construct.hpp"
#include "mincodes/corpus.hpp"
#include "mincodes/geometry.hpp"
#include "mincodes/minimal.hpp"

namespace mincodes {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

/// Points of PG(k-1,q) with their hyperplane incidences.
struct Space {
  std::size_t k;
  int q;
  std::vector<Point> points;
  std::vector<Point> normals;
  std::vector<std::vector<std::uint32_t>> outside;  // hyperplanes missing each point
  std::vector<std::uint64_t> masks;                 // q = 2 bit encodings

  Space(std::size_t k_, int q_) : k(k_), q(q_), points(all_points(k_, q_)), normals(points) {
    const Field& f = Field::get(q);
    outside.resize(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (points[p][i]) m |= std::uint64_t{1} << i;
      masks.push_back(m);
      for (std::size_t h = 0; h < normals.size(); ++h) {
        Symbol s = 0;
        for (std::size_t i = 0; i < k; ++i) s = f.add(s, f.mul(points[p][i], normals[h][i]));
        if (s != 0) outside[p].push_back(static_cast<std::uint32_t>(h));
      }
    }
  }

  std::size_t unit_index(std::size_t i) const {
    Point e(k, 0);
    e[i] = 1;
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), e) -
                                    points.begin());
  }

  /// Strong blocking test for a list of point indices (repeats allowed).
  bool strong_blocking(const std::vector<std::uint32_t>& cols) const {
    std::vector<std::uint32_t> distinct(cols);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (q == 2) {
      std::vector<std::uint64_t> m;
      for (auto c : distinct) m.push_back(masks[c]);
      for (std::uint64_t h = 1; h < (std::uint64_t{1} << k); ++h)
        if (!kernels::detail::hyperplane_spanned(m.data(), m.size(), k, h)) return false;
      return true;
    }
    const Field& f = Field::get(q);
    detail::Basis basis(k, f);
    for (std::size_t h = 0; h < normals.size(); ++h) {
      basis.clear();
      bool ok = k <= 1;
      for (auto c : distinct) {
        if (ok) break;
        if (std::binary_search(outside[c].begin(), outside[c].end(), static_cast<std::uint32_t>(h)))
          continue;
        if (basis.insert(points[c]) && basis.rank() == k - 1) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  }
};

struct Shared {
  const SearchBudget& budget;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
};

/// Depth-first search over one subtree at fixed length.
class Walker {
 public:
  Walker(const Space& space, std::size_t n, std::size_t delta, Shared& shared)
      : s_(space), n_(n), delta_(delta), shared_(shared) {
    lmin_ = (s_.k - 1) * static_cast<std::size_t>(s_.q - 1) + 1;
    wmax_ = n - s_.k + 1;
    weights_.assign(s_.normals.size(), 0);
    for (std::size_t i = 0; i < s_.k; ++i) place(static_cast<std::uint32_t>(s_.unit_index(i)));
  }

  bool feasible(std::size_t remaining) const {
    for (auto w : weights_) {
      const std::size_t lo = std::max<std::size_t>(w, lmin_);
      const std::size_t hi = std::min<std::size_t>(w + remaining, wmax_);
      if ((lo + delta_ - 1) / delta_ * delta_ > hi) return false;
    }
    return true;
  }

  void place(std::uint32_t p) {
    cols_.push_back(p);
    for (auto h : s_.outside[p]) ++weights_[h];
  }
  void remove() {
    const auto p = cols_.back();
    cols_.pop_back();
    for (auto h : s_.outside[p]) --weights_[h];
  }

  /// Extends with points of index >= start until length n; stops at the first solution.
  bool run(std::uint32_t start) {
    if (shared_.aborted.load(std::memory_order_relaxed)) return false;
    ++local_nodes_;
    if ((local_nodes_ & 1023) == 0) flush();
    const std::size_t remaining = n_ - cols_.size();
    if (!feasible(remaining)) return false;
    if (remaining == 0) return s_.strong_blocking(cols_);
    for (std::uint32_t p = start; p < s_.points.size(); ++p) {
      place(p);
      const bool hit = run(p);
      if (hit) return true;
      remove();
      if (shared_.aborted.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  void flush() {
    const auto total = shared_.nodes.fetch_add(local_nodes_ - flushed_) + (local_nodes_ - flushed_);
    flushed_ = local_nodes_;
    const auto& b = shared_.budget;
    if (b.max_nodes && total > b.max_nodes) shared_.aborted = true;
    if (b.max_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - shared_.start).count() > b.max_seconds)
      shared_.aborted = true;
  }

  std::uint64_t nodes() const { return local_nodes_; }
  const std::vector<std::uint32_t>& columns() const { return cols_; }

 private:
  const Space& s_;
  std::size_t n_;
  std::size_t delta_;
  Shared& shared_;
  std::size_t lmin_ = 0;
  std::size_t wmax_ = 0;
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint32_t> cols_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t flushed_ = 0;
};

struct LengthRun {
  bool found = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> columns;
};

LengthRun search_length(const Space& space, std::size_t n, std::size_t delta, Shared& shared) {
  LengthRun out;
  Walker root(space, n, delta, shared);
  if (n == space.k) {
    out.found = root.run(0);
    root.flush();
    out.nodes = root.nodes();
    out.aborted = shared.aborted;
    if (out.found) out.columns = root.columns();
    return out;
  }
  const std::int64_t branches = static_cast<std::int64_t>(space.points.size());
  std::vector<LengthRun> sub(static_cast<std::size_t>(branches));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < branches; ++b) {
    Walker w(space, n, delta, shared);
    w.place(static_cast<std::uint32_t>(b));
    auto& r = sub[static_cast<std::size_t>(b)];
    r.found = w.run(static_cast<std::uint32_t>(b));
    w.flush();
    r.nodes = w.nodes();
    if (r.found) r.columns = w.columns();
  }
  out.nodes = 1;
  for (auto& r : sub) {
    out.nodes += r.nodes;
    if (r.found && !out.found) {
      out.found = true;
      out.columns = r.columns;
    }
  }
  out.aborted = shared.aborted && !out.found;
  return out;
}

void check_witness(const LinearCode& code, std::size_t delta) {
  if (!is_spanning(code_to_multiset(code))) throw std::runtime_error("witness is not spanning");
  if (!is_minimal_geometric(code)) throw std::runtime_error("witness is not minimal");
  const auto we = weight_enumerator(code);
  for (auto w : we.nonzero_weights())
    if (w % delta != 0)
      throw std::runtime_error("witness has weight " + std::to_string(w) +
                               " not divisible by " + std::to_string(delta));
}

}  // namespace

SearchResult search_min_length(const SearchParams& params, const SearchBudget& budget,
                               const ProgressFn& progress) {
  if (params.k == 0) throw std::invalid_argument("search needs k >= 1");
  if (params.delta == 0) throw std::invalid_argument("delta must be positive");
  if (params.k > 8) throw std::invalid_argument("search supports k <= 8");
  Field::get(params.q);
  const auto t0 = Clock::now();
  SearchResult result;
  result.params = params;
  result.exhausted_up_to = params.k - 1;
  const Space space(params.k, params.q);
  Shared shared{budget, t0};

  const std::size_t k = params.k;
  const std::size_t lmin = (k - 1) * static_cast<std::size_t>(params.q - 1) + 1;
  std::size_t dmin = std::max(lmin, params.delta);
  dmin = (dmin + params.delta - 1) / params.delta * params.delta;
  const std::size_t bound =
      params.griesmer_prune ? std::max(griesmer_bound(k, dmin, params.q), dmin + k - 1) : 0;

  result.status = SearchStatus::exhausted;
  for (std::size_t n = k; n <= params.n_max; ++n) {
    LengthOutcome outcome{n, "bound", 0};
    if (n < bound) {
      result.exhausted_up_to = n;
      result.lengths.push_back(outcome);
      if (progress) progress(outcome);
      continue;
    }
    const LengthRun run = search_length(space, n, params.delta, shared);
    outcome.nodes = run.nodes;
    result.node_count += run.nodes;
    if (run.found) {
      outcome.method = "found";
      Matrix g(k, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i) g(i, j) = space.points[run.columns[j]][i];
      LinearCode code(g, params.q);
      check_witness(code, params.delta);
      result.witness = std::move(g);
      result.found_length = n;
      result.status = SearchStatus::found;
    } else if (run.aborted) {
      outcome.method = "budget";
      result.status = SearchStatus::budget_exhausted;
    } else {
      outcome.method = "search";
      result.exhausted_up_to = n;
    }
    result.lengths.push_back(outcome);
    if (progress) progress(outcome);
    if (result.status != SearchStatus::exhausted) break;
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return result;
}

namespace {

struct Candidate {
  std::string source;
  LinearCode code;
};

std::vector<Candidate> base_candidates(std::size_t k, int q) {
  std::vector<Candidate> out;
  out.push_back({"construction: simplex(" + std::to_string(k) + "," + std::to_string(q) + ")",
                 simplex(k, q)});
  if (q == 2 && k % 2 == 0 && k >= 4)
    out.push_back({"construction: disjoint_subspaces_code(" + std::to_string(k / 2) + ")",
                   disjoint_subspaces_code(k / 2)});
  for (const auto& entry : corpus_entries()) {
    if (entry.q != q || entry.k != k || entry.expected_minimal != std::optional<bool>(true))
      continue;
    LinearCode code = load_entry_code(entry);
    out.push_back({"corpus: " + entry.id, code});
    if (q == 2) {
      const auto we = weight_enumerator(code);
      if (divisibility(we) % 2 != 0)
        out.push_back({"parity extension of corpus: " + entry.id, parity_extend(code)});
    }
  }
  return out;
}

bool divisible_by(const LinearCode& code, std::size_t delta) {
  for (auto w : weight_enumerator(code).nonzero_weights())
    if (w % delta != 0) return false;
  return true;
}

}  // namespace

LengthVerdict verify_length_value(std::size_t k, int q, std::size_t delta, std::size_t claimed,
                                  const SearchBudget& budget) {
  if (k == 0 || delta == 0 || claimed == 0)
    throw std::invalid_argument("k, delta and the claimed length must be positive");
  LengthVerdict v;
  std::vector<Candidate> candidates;
  if (k == 1) {
    Matrix g(1, 1);
    g(0, 0) = 1;
    candidates.push_back({"construction: single point", LinearCode(g, q)});
  } else {
    candidates = base_candidates(k, q);
  }
  for (const auto& c : candidates) {
    if (claimed % c.code.n() != 0) continue;
    const std::size_t t = claimed / c.code.n();
    const LinearCode code = t == 1 ? c.code : replicate(c.code, t);
    if (!divisible_by(code, delta)) continue;
    if (!is_minimal_geometric(code))
      throw std::runtime_error(c.source + ": witness is not minimal");
    if (!is_spanning(code_to_multiset(code)))
      throw std::runtime_error(c.source + ": witness is not spanning");
    v.upper_verified = true;
    v.witness_source = t == 1 ? c.source : c.source + " replicated " + std::to_string(t) + " times";
    break;
  }
  const bool searchable = k == 1 || (q == 2 && k <= 4) || (q == 3 && k <= 3 && delta <= 3);
  if (!searchable) {
    v.lower_note = "lower bound deferred to the literature";
    return v;
  }
  SearchResult r = search_min_length({k, q, delta, claimed, true}, budget);
  if (r.status == SearchStatus::found && r.found_length == claimed) {
    v.lower_verified = true;
    v.lower_note = "no code of length <= " + std::to_string(claimed - 1) + " (exhaustive)";
    if (!v.upper_verified) {
      v.upper_verified = true;
      v.witness_source = "search";
    }
  } else if (r.status == SearchStatus::found) {
    v.lower_note = "search found a shorter code of length " + std::to_string(*r.found_length);
  } else if (r.status == SearchStatus::budget_exhausted) {
    v.lower_note = "budget exhausted; excluded lengths <= " + std::to_string(r.exhausted_up_to);
  } else {
    v.lower_note = "no code found up to the claimed length";
  }
  v.search = std::move(r);
  return v;
}

}  // namespace mincodes
