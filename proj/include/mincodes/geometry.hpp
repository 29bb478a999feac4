#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mincodes/code.hpp"

namespace mincodes {

/// A projective point stored as a vector whose first nonzero coordinate is 1.
using Point = std::vector<Symbol>;

/// Scales v so that its first nonzero coordinate is 1. Throws for the zero vector.
Point normalize_point(std::span<const Symbol> v, const Field& field);

/// All (q^k - 1)/(q - 1) points of PG(k-1, q) in lexicographic order.
std::vector<Point> all_points(std::size_t k, int q);

/// A multiset of points of PG(k-1, q). Points are kept in lexicographic order; entries with
/// multiplicity zero are never stored.
class PointMultiset {
 public:
  PointMultiset(std::size_t k, int q);

  std::size_t k() const { return k_; }
  int q() const { return q_; }
  const Field& field() const { return Field::get(q_); }

  /// Adds `count` copies of the normalized form of v.
  void add(std::span<const Symbol> v, std::size_t count = 1);
  std::size_t multiplicity(std::span<const Symbol> v) const;

  /// Sum of all multiplicities.
  std::size_t cardinality() const;
  const std::map<Point, std::size_t>& entries() const { return points_; }

  bool operator==(const PointMultiset&) const = default;

 private:
  std::size_t k_;
  int q_;
  std::map<Point, std::size_t> points_;
};

/// Column multiset of the generator. Throws std::invalid_argument for a zero column.
PointMultiset code_to_multiset(const LinearCode& code);

/// True iff the support points have rank k.
bool is_spanning(const PointMultiset& ms);

/// True iff for every hyperplane H the support points inside H span H.
bool is_strong_blocking(const PointMultiset& ms);

/// Image under the projection from Q, in the frame that drops Q's pivot coordinate. Points on
/// the line through Q and P map to the class of P - P_p Q, p being Q's first nonzero index.
PointMultiset project_through_point(const PointMultiset& ms, std::span<const Symbol> q_point);

/// Clamps every multiplicity to one.
PointMultiset reduce_to_set(const PointMultiset& ms);

/// Generator with the points as columns in lexicographic order, each repeated by its
/// multiplicity. Throws std::invalid_argument unless the multiset spans.
LinearCode multiset_to_code(const PointMultiset& ms);

/// JSON list of {"point": [...], "multiplicity": m}.
std::string multiset_to_json(const PointMultiset& ms);
/// Inverse of multiset_to_json; k is taken from the point length.
PointMultiset multiset_from_json(const std::string& text, int q);

}  // namespace mincodes
