#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

#include "kernels_detail.hpp"
#include "mincodes/kernels.hpp"

namespace mincodes::kernels {

namespace {
constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
int g_threads = 0;
}  // namespace

void set_thread_count(int threads) {
  g_threads = threads;
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
}

int thread_count() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

namespace parallel {

std::vector<std::uint64_t> weight_histogram(const LinearCode& code) {
  const std::size_t n = code.n();
  const std::uint64_t total = code.size();
  const std::int64_t chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::vector<std::uint64_t> hist(n + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      if (code.q() == 2 && code.words() == 1) {
        detail::gray_walk_1(code, begin, end,
                            [&](std::uint64_t cw) { ++local[static_cast<std::size_t>(std::popcount(cw))]; });
      } else if (code.q() == 2) {
        detail::gray_walk(code, begin, end, [&](const std::uint64_t* cw) {
          ++local[detail::popcount_words(cw, code.words())];
        });
      } else {
        detail::symbol_walk(code, begin, end, [&](const std::vector<Symbol>& word) {
          std::size_t w = 0;
          for (Symbol s : word) w += s != 0;
          ++local[w];
        });
      }
    }
#pragma omp critical
    for (std::size_t w = 0; w <= n; ++w) hist[w] += local[w];
  }
  return hist;
}

bool has_nested_support(const SupportTable& t, std::size_t min_gap) {
  if (min_gap == 0) min_gap = 1;
  const std::size_t words = t.words;
  std::atomic<bool> found{false};
  const std::int64_t count = static_cast<std::int64_t>(t.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t ci = 0; ci < count; ++ci) {
    if (found.load(std::memory_order_relaxed)) continue;
    const std::size_t c = static_cast<std::size_t>(ci);
    const std::size_t w = t.weights[c];
    if (w < min_gap) continue;
    const std::size_t limit = t.weight_begin[w - min_gap + 1];
    const std::uint64_t* cb = t.bits.data() + c * words;
    bool hit = false;
    if (words == 1) {
      const std::uint64_t mask = ~cb[0];
      const std::uint64_t* bits = t.bits.data();
      for (std::size_t b = 0; b < limit; ++b) hit |= (bits[b] & mask) == 0;
    } else {
      for (std::size_t b = 0; b < limit && !hit; ++b) {
        const std::uint64_t* bb = t.bits.data() + b * words;
        std::uint64_t outside = 0;
        for (std::size_t i = 0; i < words; ++i) outside |= bb[i] & ~cb[i];
        hit = outside == 0;
      }
    }
    if (hit) found.store(true, std::memory_order_relaxed);
  }
  return found.load();
}

bool has_disjoint_pair(const SupportTable& t) {
  const std::size_t words = t.words;
  std::atomic<bool> found{false};
  const std::int64_t count = static_cast<std::int64_t>(t.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t bi = 0; bi < count; ++bi) {
    if (found.load(std::memory_order_relaxed)) continue;
    const std::size_t b = static_cast<std::size_t>(bi);
    const std::size_t w = t.weights[b];
    if (2 * w > t.length) continue;
    const std::size_t limit = t.weight_begin[t.length - w + 1];
    const std::uint64_t* bb = t.bits.data() + b * words;
    bool hit = false;
    if (words == 1) {
      const std::uint64_t v = bb[0];
      const std::uint64_t* bits = t.bits.data();
      for (std::size_t c = b + 1; c < limit; ++c) hit |= (bits[c] & v) == 0;
    } else {
      for (std::size_t c = b + 1; c < limit && !hit; ++c) {
        const std::uint64_t* cb = t.bits.data() + c * words;
        std::uint64_t common = 0;
        for (std::size_t i = 0; i < words; ++i) common |= bb[i] & cb[i];
        hit = common == 0;
      }
    }
    if (hit) found.store(true, std::memory_order_relaxed);
  }
  return found.load();
}

std::uint64_t count_right_angles(std::span<const std::uint64_t> points, std::size_t words) {
  const std::int64_t count = words ? static_cast<std::int64_t>(points.size() / words) : 0;
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t z = 0; z < count; ++z) {
    const std::uint64_t* zp = points.data() + z * static_cast<std::int64_t>(words);
    for (std::int64_t b = 0; b < count; ++b) {
      if (b == z) continue;
      for (std::int64_t c = b + 1; c < count; ++c) {
        if (c == z) continue;
        if (detail::dot_count(points.data() + b * static_cast<std::int64_t>(words),
                              points.data() + c * static_cast<std::int64_t>(words), zp, words) == 0)
          ++total;
      }
    }
  }
  return total;
}

bool hyperplanes_spanned(std::span<const std::uint64_t> points, std::size_t k) {
  if (k == 0 || k > 63) throw std::invalid_argument("hyperplane test supports 1 <= k <= 63");
  const std::int64_t end = std::int64_t{1} << k;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t h = 1; h < end; ++h) {
    if (failed.load(std::memory_order_relaxed)) continue;
    if (!detail::hyperplane_spanned(points.data(), points.size(), k, static_cast<std::uint64_t>(h)))
      failed.store(true, std::memory_order_relaxed);
  }
  return !failed.load();
}

}  // namespace parallel
}  // namespace mincodes::kernels
