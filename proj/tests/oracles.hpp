#pragma once

// Brute-force reference computations for the tests. Deliberately naive and independent of the
// library: plain int vectors, GF(4) via polynomial multiplication, full enumeration everywhere.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "mincodes/code.hpp"

namespace oracle {

using Vec = std::vector<int>;

inline int add(int a, int b, int q) { return q == 4 ? (a ^ b) : (a + b) % q; }

inline int mul(int a, int b, int q) {
  if (q != 4) return (a * b) % q;
  // Elements a0 + a1 w as bit pairs, reduced by w^2 = w + 1.
  int r = 0;
  for (int i = 0; i < 2; ++i)
    if ((b >> i) & 1) r ^= a << i;
  if (r & 4) r ^= 0b111;
  return r;
}

inline int neg(int a, int q) { return q == 3 ? (3 - a) % 3 : a; }

inline int inv(int a, int q) {
  for (int b = 1; b < q; ++b)
    if (mul(a, b, q) == 1) return b;
  throw std::invalid_argument("no inverse");
}

inline std::vector<Vec> rows_of(const mincodes::Matrix& m) {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

inline int weight(const Vec& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

/// Every codeword, message order lexicographic with the last symbol fastest.
inline std::vector<Vec> all_codewords(const std::vector<Vec>& g, int q) {
  const std::size_t k = g.size(), n = g.front().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(q);
  std::vector<Vec> out;
  out.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    Vec msg(k);
    std::uint64_t rest = m;
    for (std::size_t d = k; d-- > 0;) {
      msg[d] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    Vec w(n, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < n; ++j) w[j] = add(w[j], mul(msg[r], g[r][j], q), q);
    out.push_back(std::move(w));
  }
  return out;
}

inline std::map<int, std::uint64_t> weight_counts(const std::vector<Vec>& words) {
  std::map<int, std::uint64_t> out;
  for (const auto& w : words) ++out[weight(w)];
  return out;
}

inline std::map<int, std::uint64_t> weight_counts(const mincodes::LinearCode& code) {
  return weight_counts(all_codewords(rows_of(code.generator()), code.q()));
}

inline std::map<int, std::uint64_t> to_map(const mincodes::WeightEnumerator& we) {
  std::map<int, std::uint64_t> out;
  for (std::size_t w = 0; w <= we.n(); ++w)
    if (we[w] != 0) out[static_cast<int>(w)] = static_cast<std::uint64_t>(we[w]);
  return out;
}

inline int rank(std::vector<Vec> rows, int q) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[static_cast<std::size_t>(r)]);
    const int s = inv(rows[static_cast<std::size_t>(r)][c], q);
    for (auto& x : rows[static_cast<std::size_t>(r)]) x = mul(x, s, q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = add(rows[i][j], mul(neg(f, q), rows[static_cast<std::size_t>(r)][j], q), q);
    }
    ++r;
  }
  return r;
}

/// supp(a) strictly inside supp(b) for some nonzero a, b.
inline bool minimal_by_supports(const std::vector<Vec>& words) {
  for (const auto& a : words) {
    if (weight(a) == 0) continue;
    for (const auto& b : words) {
      if (weight(b) <= weight(a)) continue;
      bool inside = true;
      for (std::size_t j = 0; j < a.size() && inside; ++j) inside = a[j] == 0 || b[j] != 0;
      if (inside) return false;
    }
  }
  return true;
}

/// Every hyperplane (all nonzero normals, scalar multiples included) meets the columns in a
/// set of rank k - 1.
inline bool strong_blocking(const std::vector<Vec>& g, int q) {
  const std::size_t k = g.size(), n = g.front().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(q);
  for (std::uint64_t h = 1; h < total; ++h) {
    Vec normal(k);
    std::uint64_t rest = h;
    for (std::size_t i = 0; i < k; ++i) {
      normal[i] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    std::vector<Vec> inside;
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t i = 0; i < k; ++i) s = add(s, mul(normal[i], g[i][j], q), q);
      if (s != 0) continue;
      Vec col(k);
      for (std::size_t i = 0; i < k; ++i) col[i] = g[i][j];
      inside.push_back(col);
    }
    if (rank(inside, q) != static_cast<int>(k) - 1) return false;
  }
  return true;
}

/// Apex z, unordered {b, c}: integer dot product (b - z).(c - z) equal to zero.
inline std::uint64_t right_angles(const std::vector<Vec>& pts) {
  std::uint64_t count = 0;
  for (std::size_t z = 0; z < pts.size(); ++z)
    for (std::size_t b = 0; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        if (b == z || c == z) continue;
        long dot = 0;
        for (std::size_t i = 0; i < pts[z].size(); ++i)
          dot += static_cast<long>(pts[b][i] - pts[z][i]) * (pts[c][i] - pts[z][i]);
        if (dot == 0) ++count;
      }
  return count;
}

/// Weight counts of { x in GF(q)^n : G x^T = 0 } by scanning all q^n vectors.
inline std::map<int, std::uint64_t> dual_counts(const std::vector<Vec>& g, int q) {
  const std::size_t k = g.size(), n = g.front().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
  std::map<int, std::uint64_t> out;
  Vec x(n, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    bool orth = true;
    for (std::size_t r = 0; r < k && orth; ++r) {
      int s = 0;
      for (std::size_t j = 0; j < n; ++j) s = add(s, mul(g[r][j], x[j], q), q);
      orth = s == 0;
    }
    if (orth) ++out[weight(x)];
    for (std::size_t j = 0; j < n; ++j) {
      if (++x[j] < q) break;
      x[j] = 0;
    }
  }
  return out;
}

/// Uniform random full-rank k x n generator.
inline mincodes::LinearCode random_code(std::mt19937_64& rng, std::size_t k, std::size_t n, int q) {
  if (k > n) throw std::invalid_argument("random_code: k > n");
  std::uniform_int_distribution<int> sym(0, q - 1);
  while (true) {
    mincodes::Matrix m(k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<mincodes::Symbol>(sym(rng));
    if (rank(rows_of(m), q) == static_cast<int>(k)) return mincodes::LinearCode(m, q);
  }
}

}  // namespace oracle
