#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "mincodes/code.hpp"

namespace mincodes::kernels::detail {

inline std::size_t popcount_words(const std::uint64_t* w, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(w[i]));
  return total;
}

/// Binary codeword of message m (bit r of m selects generator row r).
inline void encode_binary(const LinearCode& code, std::uint64_t message, std::uint64_t* out) {
  const std::size_t words = code.words();
  for (std::size_t i = 0; i < words; ++i) out[i] = 0;
  for (std::size_t r = 0; r < code.k(); ++r) {
    if (!((message >> r) & 1)) continue;
    auto row = code.packed_row(r);
    for (std::size_t i = 0; i < words; ++i) out[i] ^= row[i];
  }
}

/// Walks Gray-code indices [begin, end) of a binary code, calling visit(words_ptr) for each
/// codeword gray(i) = i ^ (i >> 1).
template <class Visit>
void gray_walk(const LinearCode& code, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const std::size_t words = code.words();
  std::vector<std::uint64_t> cw(words);
  encode_binary(code, begin ^ (begin >> 1), cw.data());
  visit(static_cast<const std::uint64_t*>(cw.data()));
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    auto row = code.packed_row(static_cast<std::size_t>(std::countr_zero(i)));
    for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
    visit(static_cast<const std::uint64_t*>(cw.data()));
  }
}

/// Single-word specialization of gray_walk for n <= 64.
template <class Visit>
void gray_walk_1(const LinearCode& code, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  std::vector<std::uint64_t> rows(code.k());
  for (std::size_t r = 0; r < code.k(); ++r) rows[r] = code.packed_row(r)[0];
  std::uint64_t cw = 0;
  encode_binary(code, begin ^ (begin >> 1), &cw);
  visit(cw);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    cw ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    visit(cw);
  }
}

/// Odometer walk over messages [begin, end) in lexicographic order for any q, calling
/// visit(symbols) with the current codeword.
template <class Visit>
void symbol_walk(const LinearCode& code, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const Field& f = code.field();
  const std::size_t k = code.k();
  const std::size_t n = code.n();
  std::vector<Symbol> message(k, 0);
  std::uint64_t rest = begin;
  for (std::size_t d = k; d-- > 0;) {
    message[d] = static_cast<Symbol>(rest % static_cast<std::uint64_t>(f.q()));
    rest /= static_cast<std::uint64_t>(f.q());
  }
  std::vector<Symbol> word = code.encode(message);
  for (std::uint64_t i = begin;; ++i) {
    visit(static_cast<const std::vector<Symbol>&>(word));
    if (i + 1 == end) break;
    for (std::size_t d = k; d-- > 0;) {
      const Symbol old = message[d];
      const Symbol next = static_cast<Symbol>((old + 1) % f.q());
      message[d] = next;
      const Symbol delta = f.sub(next, old);
      auto row = code.generator().row(d);
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, row[j]));
      if (next != 0) break;
    }
  }
}

inline std::uint64_t dot_count(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* z,
                               std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i)
    total += static_cast<std::uint64_t>(std::popcount((a[i] ^ z[i]) & (b[i] ^ z[i])));
  return total;
}

/// Rank k-1 test for the points inside hyperplane h (binary, k-bit masks).
inline bool hyperplane_spanned(const std::uint64_t* points, std::size_t count, std::size_t k,
                               std::uint64_t h) {
  if (k <= 1) return true;
  std::uint64_t basis[64] = {};
  std::size_t rank = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t v = points[i];
    if (std::popcount(v & h) & 1) continue;
    while (v) {
      const int top = 63 - std::countl_zero(v);
      if (!basis[top]) {
        basis[top] = v;
        if (++rank == k - 1) return true;
        break;
      }
      v ^= basis[top];
    }
  }
  return false;
}

}  // namespace mincodes::kernels::detail
