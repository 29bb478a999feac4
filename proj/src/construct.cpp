#include "mincodes/construct.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mincodes/geometry.hpp"

namespace mincodes {

namespace {

std::map<std::size_t, std::size_t> profile(const std::vector<std::size_t>& sizes) {
  std::map<std::size_t, std::size_t> out;
  for (auto s : sizes) ++out[s];
  return out;
}

std::string profile_string(const std::map<std::size_t, std::size_t>& p) {
  std::string out;
  for (const auto& [size, count] : p) {
    if (!out.empty()) out += ' ';
    out += std::to_string(size) + "^" + std::to_string(count);
  }
  return out;
}

std::vector<Symbol> parse_bits(const std::string& s, int q) {
  std::vector<Symbol> out;
  for (char c : s) {
    if (c == ' ') continue;
    if (c < '0' || c - '0' >= q) throw std::invalid_argument("bad generator symbol in '" + s + "'");
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return out;
}

}  // namespace

Matrix circulant(std::span<const Symbol> g, std::size_t u, std::size_t v) {
  const std::size_t s = g.size();
  if (s == 0 || u % s != 0 || v % s != 0)
    throw std::invalid_argument("generator length must divide both block dimensions");
  Matrix m(u, v);
  for (std::size_t r = 0; r < u; ++r)
    for (std::size_t c = 0; c < v; ++c) m(r, c) = g[(c + s - r % s) % s];
  return m;
}

std::map<std::size_t, std::size_t> CirculantSpec::alpha() const { return profile(row_sizes); }
std::map<std::size_t, std::size_t> CirculantSpec::beta() const { return profile(col_sizes); }

std::string CirculantSpec::type() const {
  return "(" + profile_string(alpha()) + "," + profile_string(beta()) + "," + std::to_string(t) +
         ")";
}

void CirculantSpec::validate() const {
  Field::get(q);
  if (t == 0) throw std::invalid_argument("t must be positive");
  if (row_sizes.empty() || col_sizes.empty()) throw std::invalid_argument("empty block grid");
  for (auto u : row_sizes)
    if (u == 0 || t % u != 0) throw std::invalid_argument("block height does not divide t");
  for (auto v : col_sizes)
    if (v == 0 || t % v != 0) throw std::invalid_argument("block width does not divide t");
  if (generators.size() != row_sizes.size())
    throw std::invalid_argument("generator grid height differs from the row profile");
  bool full = false;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != col_sizes.size())
      throw std::invalid_argument("generator grid row " + std::to_string(i) + " has wrong width");
    for (std::size_t j = 0; j < col_sizes.size(); ++j) {
      const std::size_t s = generators[i][j].size();
      if (s == 0 || t % s != 0 || row_sizes[i] % s != 0 || col_sizes[j] % s != 0)
        throw std::invalid_argument("generator of block (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") has invalid length");
      for (Symbol x : generators[i][j])
        if (x >= q) throw std::invalid_argument("generator symbol outside GF(q)");
      full = full || s == t;
    }
  }
  if (!full) throw std::invalid_argument("no generator has length t");
}

CirculantSpec parse_circulant_spec(const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  CirculantSpec spec;
  spec.t = doc.at("t").get<std::size_t>();
  spec.q = doc.value("q", 2);
  spec.systematic = doc.value("systematic", false);
  spec.row_sizes = doc.at("rows").get<std::vector<std::size_t>>();
  spec.col_sizes = doc.at("columns").get<std::vector<std::size_t>>();
  const auto& blocks = doc.at("blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& row = spec.generators.emplace_back();
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      const auto& b = blocks[i][j];
      const auto& g = row.emplace_back(
          parse_bits(b.is_string() ? b.get<std::string>() : b.at("generator").get<std::string>(),
                     spec.q));
      if (!b.is_object()) continue;
      auto check = [&](const char* key, std::size_t expected) {
        if (b.contains(key) && b.at(key).get<std::size_t>() != expected)
          throw std::invalid_argument(std::string("block field ") + key + " inconsistent at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
      };
      if (i < spec.row_sizes.size()) check("u", spec.row_sizes[i]);
      if (j < spec.col_sizes.size()) check("v", spec.col_sizes[j]);
      check("s", g.size());
    }
  }
  spec.validate();
  if (doc.contains("alpha") && doc.at("alpha").get<std::string>() != profile_string(spec.alpha()))
    throw std::invalid_argument("alpha does not match the row sizes");
  if (doc.contains("beta") && doc.at("beta").get<std::string>() != profile_string(spec.beta()))
    throw std::invalid_argument("beta does not match the column sizes");
  return spec;
}

std::string circulant_spec_to_json(const CirculantSpec& spec) {
  nlohmann::json doc;
  doc["t"] = spec.t;
  doc["q"] = spec.q;
  doc["systematic"] = spec.systematic;
  doc["alpha"] = profile_string(spec.alpha());
  doc["beta"] = profile_string(spec.beta());
  doc["rows"] = spec.row_sizes;
  doc["columns"] = spec.col_sizes;
  auto blocks = nlohmann::json::array();
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < spec.generators[i].size(); ++j) {
      std::string bits;
      for (Symbol x : spec.generators[i][j]) bits += static_cast<char>('0' + x);
      row.push_back({{"u", spec.row_sizes[i]},
                     {"v", spec.col_sizes[j]},
                     {"s", bits.size()},
                     {"generator", bits}});
    }
    blocks.push_back(row);
  }
  doc["blocks"] = blocks;
  return doc.dump(2);
}

Matrix assemble(const CirculantSpec& spec) {
  spec.validate();
  const std::size_t k = std::accumulate(spec.row_sizes.begin(), spec.row_sizes.end(), std::size_t{0});
  const std::size_t n = std::accumulate(spec.col_sizes.begin(), spec.col_sizes.end(), std::size_t{0});
  Matrix g(k, n);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < spec.row_sizes.size(); ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < spec.col_sizes.size(); ++j) {
      const Matrix block = circulant(spec.generators[i][j], spec.row_sizes[i], spec.col_sizes[j]);
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) g(r0 + r, c0 + c) = block(r, c);
      c0 += spec.col_sizes[j];
    }
    r0 += spec.row_sizes[i];
  }
  return g;
}

LinearCode generalized_circulant(const CirculantSpec& spec) {
  Matrix g = assemble(spec);
  const Field& f = Field::get(spec.q);
  if (spec.systematic) {
    if (g.cols() < g.rows()) throw std::invalid_argument("systematic matrix narrower than tall");
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.rows(); ++c)
        if (g(r, c) != (r == c ? 1 : 0))
          throw std::invalid_argument("systematic flag set but the matrix does not start with an identity");
  }
  if (rank(g, f) == g.rows()) return LinearCode(std::move(g), spec.q);
  return LinearCode(row_reduce(g, f).reduced, spec.q);
}

bool has_cyclic_symmetry(const LinearCode& code, const std::vector<std::size_t>& col_sizes) {
  if (std::accumulate(col_sizes.begin(), col_sizes.end(), std::size_t{0}) != code.n())
    throw std::invalid_argument("column blocks do not cover the code length");
  const Matrix& g = code.generator();
  for (std::size_t r = 0; r < code.k(); ++r) {
    std::vector<Symbol> shifted(code.n());
    std::size_t c0 = 0;
    for (auto v : col_sizes) {
      for (std::size_t c = 0; c < v; ++c) shifted[c0 + (c + 1) % v] = g(r, c0 + c);
      c0 += v;
    }
    if (!code.contains(shifted)) return false;
  }
  return true;
}

LinearCode simplex(std::size_t k, int q) {
  if (k == 0) throw std::invalid_argument("simplex code needs k >= 1");
  const auto points = all_points(k, q);
  Matrix g(k, points.size());
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) g(i, j) = points[j][i];
  return LinearCode(std::move(g), q);
}

LinearCode disjoint_subspaces_code(std::size_t t) {
  if (t < 2) throw std::invalid_argument("disjoint subspaces code needs t >= 2");
  if (t > 20) throw std::invalid_argument("disjoint subspaces code limited to t <= 20");
  const std::size_t count = (std::size_t{1} << t) - 1;
  Matrix g(2 * t, 3 * count);
  for (std::size_t v = 1; v <= count; ++v) {
    for (std::size_t i = 0; i < t; ++i) {
      const Symbol bit = static_cast<Symbol>((v >> (t - 1 - i)) & 1);
      g(i, v - 1) = bit;
      g(t + i, count + v - 1) = bit;
      g(i, 2 * count + v - 1) = bit;
      g(t + i, 2 * count + v - 1) = bit;
    }
  }
  return LinearCode(std::move(g), 2);
}

}  // namespace mincodes
