#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mincodes/code.hpp"

namespace mincodes {

/// u x v matrix whose first row is v/s copies of g (s = |g|) and whose other rows are cyclic
/// right shifts of the row above. Throws std::invalid_argument unless s divides u and v.
Matrix circulant(std::span<const Symbol> g, std::size_t u, std::size_t v);

/// Block grid of circulants. Block (i, j) has row_sizes[i] rows, col_sizes[j] columns and
/// generator generators[i][j].
struct CirculantSpec {
  std::size_t t = 0;
  int q = 2;
  bool systematic = false;
  std::vector<std::size_t> row_sizes;
  std::vector<std::size_t> col_sizes;
  std::vector<std::vector<std::vector<Symbol>>> generators;

  /// Multiplicity of each block height / width: the profiles alpha and beta.
  std::map<std::size_t, std::size_t> alpha() const;
  std::map<std::size_t, std::size_t> beta() const;
  /// "(1^1 6^2,1^2 6^5,6)"
  std::string type() const;

  /// Throws std::invalid_argument naming the first violated condition.
  void validate() const;
};

/// JSON: {"t", "q", "systematic", "rows": [u...], "columns": [v...], "blocks": [[{"generator":
/// "0101", "u"?, "v"?, "s"?}, ...], ...], "alpha"?, "beta"?}. Optional fields are checked.
CirculantSpec parse_circulant_spec(const std::string& json_text);
std::string circulant_spec_to_json(const CirculantSpec& spec);

/// The assembled block matrix.
Matrix assemble(const CirculantSpec& spec);

/// Code generated by the assembled matrix. Kept verbatim when it has full rank, otherwise
/// replaced by a reduced basis of its row space. With spec.systematic the matrix must start
/// with an identity.
LinearCode generalized_circulant(const CirculantSpec& spec);

/// Rotating every column block by one position maps the code onto itself.
bool has_cyclic_symmetry(const LinearCode& code, const std::vector<std::size_t>& col_sizes);

/// Columns are all points of PG(k-1, q) in lexicographic order.
LinearCode simplex(std::size_t k, int q);

/// The [3(2^t - 1), 2t]_2 code with columns (v,0), (0,v), (v,v), v != 0. Requires t >= 2.
LinearCode disjoint_subspaces_code(std::size_t t);

}  // namespace mincodes
