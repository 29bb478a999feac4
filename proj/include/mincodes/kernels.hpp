#pragma once

// Hot loops, each in a serial reference form and an OpenMP form. Both forms return identical
// results for any thread count; the serial form exists for testing and benchmarking.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mincodes/code.hpp"

namespace mincodes::kernels {

/// Packed codeword supports sorted by ascending weight.
struct SupportTable {
  std::size_t length = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> weights;
  /// weight_begin[w] is the first entry with weight >= w; size length + 2.
  std::vector<std::size_t> weight_begin;

  std::size_t size() const { return weights.size(); }
  std::span<const std::uint64_t> entry(std::size_t i) const {
    return {bits.data() + i * words, words};
  }
};

/// q = 2: every nonzero codeword. q > 2: the support of one representative per scalar class
/// (messages whose first nonzero symbol is 1). The caller checks the enumeration budget.
SupportTable build_support_table(const LinearCode& code);

namespace serial {

/// Codeword counts by weight (size n + 1).
std::vector<std::uint64_t> weight_histogram(const LinearCode& code);

/// True iff some entry's support is a proper subset of another's. min_gap is a lower bound on
/// wt(c) - wt(b) for nested supp(b) < supp(c); pass the minimum distance for binary codes and
/// 1 otherwise.
bool has_nested_support(const SupportTable& table, std::size_t min_gap);

/// True iff two entries have disjoint supports.
bool has_disjoint_pair(const SupportTable& table);

/// Right angles among 0/1 points packed with `words` words per point: triples (b, z, c) with
/// (b - z).(c - z) = 0, each unordered {b, c} counted once per apex z.
std::uint64_t count_right_angles(std::span<const std::uint64_t> points, std::size_t words);

/// Binary points as k-bit masks: true iff the points inside every hyperplane of PG(k-1, 2)
/// span it.
bool hyperplanes_spanned(std::span<const std::uint64_t> points, std::size_t k);

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> weight_histogram(const LinearCode& code);
bool has_nested_support(const SupportTable& table, std::size_t min_gap);
bool has_disjoint_pair(const SupportTable& table);
std::uint64_t count_right_angles(std::span<const std::uint64_t> points, std::size_t words);
bool hyperplanes_spanned(std::span<const std::uint64_t> points, std::size_t k);

}  // namespace parallel

/// Worker count used by the parallel kernels; 0 restores the OpenMP default.
void set_thread_count(int threads);
int thread_count();

}  // namespace mincodes::kernels
