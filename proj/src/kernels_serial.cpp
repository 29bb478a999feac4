#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kernels_detail.hpp"
#include "mincodes/kernels.hpp"

namespace mincodes::kernels {

namespace {

void index_by_weight(SupportTable& t, std::vector<std::uint64_t> raw,
                     std::vector<std::uint32_t> raw_weights) {
  const std::size_t count = raw_weights.size();
  std::vector<std::size_t> bucket(t.length + 2, 0);
  for (auto w : raw_weights) ++bucket[w + 1];
  for (std::size_t w = 1; w < bucket.size(); ++w) bucket[w] += bucket[w - 1];
  t.weight_begin = bucket;
  t.bits.assign(count * t.words, 0);
  t.weights.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t slot = bucket[raw_weights[i]]++;
    t.weights[slot] = raw_weights[i];
    std::copy_n(raw.begin() + static_cast<std::ptrdiff_t>(i * t.words), t.words,
                t.bits.begin() + static_cast<std::ptrdiff_t>(slot * t.words));
  }
}

}  // namespace

SupportTable build_support_table(const LinearCode& code) {
  SupportTable t;
  t.length = code.n();
  t.words = (code.n() + 63) / 64;
  std::vector<std::uint64_t> raw;
  std::vector<std::uint32_t> raw_weights;
  if (code.q() == 2) {
    const std::uint64_t total = code.size();
    raw.reserve((total - 1) * t.words);
    raw_weights.reserve(total - 1);
    detail::gray_walk(code, 1, total, [&](const std::uint64_t* cw) {
      raw.insert(raw.end(), cw, cw + t.words);
      raw_weights.push_back(static_cast<std::uint32_t>(detail::popcount_words(cw, t.words)));
    });
  } else {
    // Messages with first nonzero symbol 1, in lexicographic order.
    const std::uint64_t total = code.size();
    std::uint64_t per_block = total;
    for (std::size_t lead = 0; lead < code.k(); ++lead) {
      per_block /= static_cast<std::uint64_t>(code.q());
      // Messages 0..0 1 * * *: indices [per_block, 2 * per_block).
      detail::symbol_walk(code, per_block, 2 * per_block, [&](const std::vector<Symbol>& word) {
        std::size_t weight = 0;
        const std::size_t base = raw.size();
        raw.resize(base + t.words, 0);
        for (std::size_t j = 0; j < word.size(); ++j) {
          if (word[j] == 0) continue;
          raw[base + j / 64] |= std::uint64_t{1} << (j % 64);
          ++weight;
        }
        raw_weights.push_back(static_cast<std::uint32_t>(weight));
      });
    }
  }
  index_by_weight(t, std::move(raw), std::move(raw_weights));
  return t;
}

namespace serial {

std::vector<std::uint64_t> weight_histogram(const LinearCode& code) {
  std::vector<std::uint64_t> hist(code.n() + 1, 0);
  if (code.q() == 2) {
    if (code.words() == 1) {
      detail::gray_walk_1(code, 0, code.size(),
                          [&](std::uint64_t cw) { ++hist[static_cast<std::size_t>(std::popcount(cw))]; });
    } else {
      detail::gray_walk(code, 0, code.size(), [&](const std::uint64_t* cw) {
        ++hist[detail::popcount_words(cw, code.words())];
      });
    }
  } else {
    detail::symbol_walk(code, 0, code.size(), [&](const std::vector<Symbol>& word) {
      std::size_t w = 0;
      for (Symbol s : word) w += s != 0;
      ++hist[w];
    });
  }
  return hist;
}

bool has_nested_support(const SupportTable& t, std::size_t min_gap) {
  if (min_gap == 0) min_gap = 1;
  const std::size_t words = t.words;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const std::size_t w = t.weights[c];
    if (w < min_gap) continue;
    const std::size_t limit = t.weight_begin[w - min_gap + 1];
    const std::uint64_t* cb = t.bits.data() + c * words;
    for (std::size_t b = 0; b < limit; ++b) {
      const std::uint64_t* bb = t.bits.data() + b * words;
      std::uint64_t outside = 0;
      for (std::size_t i = 0; i < words; ++i) outside |= bb[i] & ~cb[i];
      if (!outside) return true;
    }
  }
  return false;
}

bool has_disjoint_pair(const SupportTable& t) {
  const std::size_t words = t.words;
  for (std::size_t b = 0; b < t.size(); ++b) {
    const std::size_t w = t.weights[b];
    if (2 * w > t.length) break;
    const std::size_t limit = t.weight_begin[t.length - w + 1];
    const std::uint64_t* bb = t.bits.data() + b * words;
    for (std::size_t c = b + 1; c < limit; ++c) {
      const std::uint64_t* cb = t.bits.data() + c * words;
      std::uint64_t common = 0;
      for (std::size_t i = 0; i < words; ++i) common |= bb[i] & cb[i];
      if (!common) return true;
    }
  }
  return false;
}

std::uint64_t count_right_angles(std::span<const std::uint64_t> points, std::size_t words) {
  const std::size_t count = words ? points.size() / words : 0;
  std::uint64_t total = 0;
  for (std::size_t z = 0; z < count; ++z) {
    const std::uint64_t* zp = points.data() + z * words;
    for (std::size_t b = 0; b < count; ++b) {
      if (b == z) continue;
      for (std::size_t c = b + 1; c < count; ++c) {
        if (c == z) continue;
        if (detail::dot_count(points.data() + b * words, points.data() + c * words, zp, words) == 0)
          ++total;
      }
    }
  }
  return total;
}

bool hyperplanes_spanned(std::span<const std::uint64_t> points, std::size_t k) {
  if (k == 0 || k > 63) throw std::invalid_argument("hyperplane test supports 1 <= k <= 63");
  const std::uint64_t end = std::uint64_t{1} << k;
  for (std::uint64_t h = 1; h < end; ++h)
    if (!detail::hyperplane_spanned(points.data(), points.size(), k, h)) return false;
  return true;
}

}  // namespace serial
}  // namespace mincodes::kernels
