#include "mincodes/geometry.hpp"

#include <atomic>
#include <json.hpp>
#include <stdexcept>

#include "basis_detail.hpp"
#include "mincodes/kernels.hpp"

namespace mincodes {

namespace {

using detail::Basis;

Symbol dot(const Point& a, const Point& b, const Field& f) {
  Symbol s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

bool strong_blocking_binary(const std::vector<Point>& support, std::size_t k) {
  std::vector<std::uint64_t> masks;
  masks.reserve(support.size());
  for (const auto& p : support) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (p[i]) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  }
  return kernels::parallel::hyperplanes_spanned(masks, k);
}

bool strong_blocking_generic(const std::vector<Point>& support, std::size_t k, int q) {
  const Field& f = Field::get(q);
  const auto normals = all_points(k, q);
  std::atomic<bool> failed{false};
  const std::int64_t count = static_cast<std::int64_t>(normals.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t h = 0; h < count; ++h) {
    if (failed.load(std::memory_order_relaxed)) continue;
    Basis basis(k, f);
    bool ok = k <= 1;
    for (const auto& p : support) {
      if (ok) break;
      if (dot(p, normals[static_cast<std::size_t>(h)], f) != 0) continue;
      if (basis.insert(p) && basis.rank() == k - 1) ok = true;
    }
    if (!ok) failed.store(true, std::memory_order_relaxed);
  }
  return !failed.load();
}

}  // namespace

Point normalize_point(std::span<const Symbol> v, const Field& field) {
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) throw std::invalid_argument("the zero vector is not a projective point");
  const Symbol s = field.inv(v[p]);
  Point out(v.begin(), v.end());
  for (auto& x : out) x = field.mul(s, x);
  return out;
}

std::vector<Point> all_points(std::size_t k, int q) {
  std::vector<Point> out;
  // Lexicographic order: leading zeros first, so iterate the pivot from the right.
  for (std::size_t lead = k; lead-- > 0;) {
    Point p(k, 0);
    p[lead] = 1;
    const std::size_t free = k - lead - 1;
    while (true) {
      out.push_back(p);
      std::size_t d = k;
      while (d-- > lead + 1) {
        if (++p[d] < q) break;
        p[d] = 0;
      }
      if (d == lead || free == 0) break;
    }
  }
  return out;
}

PointMultiset::PointMultiset(std::size_t k, int q) : k_(k), q_(q) {
  Field::get(q);
  if (k == 0) throw std::invalid_argument("point multiset needs k >= 1");
}

void PointMultiset::add(std::span<const Symbol> v, std::size_t count) {
  if (v.size() != k_) throw std::invalid_argument("point has the wrong dimension");
  if (count == 0) return;
  points_[normalize_point(v, field())] += count;
}

std::size_t PointMultiset::multiplicity(std::span<const Symbol> v) const {
  auto it = points_.find(normalize_point(v, field()));
  return it == points_.end() ? 0 : it->second;
}

std::size_t PointMultiset::cardinality() const {
  std::size_t total = 0;
  for (const auto& [p, m] : points_) total += m;
  return total;
}

PointMultiset code_to_multiset(const LinearCode& code) {
  PointMultiset ms(code.k(), code.q());
  for (std::size_t j = 0; j < code.n(); ++j) {
    auto col = code.generator().column(j);
    bool zero = true;
    for (Symbol s : col) zero = zero && s == 0;
    if (zero)
      throw std::invalid_argument("generator column " + std::to_string(j) + " is zero");
    ms.add(col);
  }
  return ms;
}

bool is_spanning(const PointMultiset& ms) {
  Basis basis(ms.k(), ms.field());
  for (const auto& [p, m] : ms.entries()) {
    basis.insert(p);
    if (basis.rank() == ms.k()) return true;
  }
  return false;
}

bool is_strong_blocking(const PointMultiset& ms) {
  std::vector<Point> support;
  for (const auto& [p, m] : ms.entries()) support.push_back(p);
  if (ms.q() == 2 && ms.k() <= 63) return strong_blocking_binary(support, ms.k());
  return strong_blocking_generic(support, ms.k(), ms.q());
}

PointMultiset project_through_point(const PointMultiset& ms, std::span<const Symbol> q_point) {
  if (ms.k() < 2) throw std::invalid_argument("projection needs k >= 2");
  const Field& f = ms.field();
  const Point q = normalize_point(q_point, f);
  if (q.size() != ms.k()) throw std::invalid_argument("point has the wrong dimension");
  std::size_t pivot = 0;
  while (q[pivot] == 0) ++pivot;
  PointMultiset out(ms.k() - 1, ms.q());
  for (const auto& [p, m] : ms.entries()) {
    if (p == q) continue;
    std::vector<Symbol> image;
    image.reserve(ms.k() - 1);
    for (std::size_t i = 0; i < ms.k(); ++i)
      if (i != pivot) image.push_back(f.sub(p[i], f.mul(p[pivot], q[i])));
    out.add(image, m);
  }
  return out;
}

PointMultiset reduce_to_set(const PointMultiset& ms) {
  PointMultiset out(ms.k(), ms.q());
  for (const auto& [p, m] : ms.entries()) out.add(p, 1);
  return out;
}

LinearCode multiset_to_code(const PointMultiset& ms) {
  if (!is_spanning(ms)) throw std::invalid_argument("point multiset does not span");
  Matrix g(ms.k(), ms.cardinality());
  std::size_t col = 0;
  for (const auto& [p, m] : ms.entries())
    for (std::size_t r = 0; r < m; ++r, ++col)
      for (std::size_t i = 0; i < ms.k(); ++i) g(i, col) = p[i];
  return LinearCode(std::move(g), ms.q());
}

std::string multiset_to_json(const PointMultiset& ms) {
  auto list = nlohmann::json::array();
  for (const auto& [p, m] : ms.entries()) {
    std::vector<int> coords(p.begin(), p.end());
    list.push_back({{"point", coords}, {"multiplicity", m}});
  }
  return list.dump();
}

PointMultiset multiset_from_json(const std::string& text, int q) {
  const auto list = nlohmann::json::parse(text);
  if (!list.is_array() || list.empty()) throw std::invalid_argument("expected a non-empty list");
  const std::size_t k = list.front().at("point").size();
  PointMultiset ms(k, q);
  for (const auto& item : list) {
    const auto coords = item.at("point").get<std::vector<int>>();
    Point p;
    for (int c : coords) {
      if (c < 0 || c >= q) throw std::invalid_argument("coordinate outside GF(q)");
      p.push_back(static_cast<Symbol>(c));
    }
    ms.add(p, item.at("multiplicity").get<std::size_t>());
  }
  return ms;
}

}  // namespace mincodes
