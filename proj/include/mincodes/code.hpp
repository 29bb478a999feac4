#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mincodes/errors.hpp"
#include "mincodes/gf.hpp"
#include "mincodes/matrix.hpp"

namespace mincodes {

using BigInt = boost::multiprecision::cpp_int;

/// Caps the number of codewords any enumeration may visit.
struct EnumerationLimits {
  std::uint64_t max_codewords = std::uint64_t{1} << 26;

  /// Defaults, overridden by MINCODES_MAX_CODEWORDS when set.
  static EnumerationLimits from_env();
};

/// A linear [n,k]_q code given by a full-rank k x n generator matrix. The generator is kept
/// exactly as supplied; standard_form() performs row reduction on demand.
class LinearCode {
 public:
  /// Throws std::invalid_argument unless the generator is non-empty with rank equal to its
  /// number of rows and every symbol lies in GF(q).
  LinearCode(Matrix generator, int q);

  int q() const { return field_->q(); }
  const Field& field() const { return *field_; }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }

  Matrix standard_form() const;

  /// q^k, saturating at UINT64_MAX.
  std::uint64_t size() const;

  /// q = 2 only: generator rows as little-endian bitsets (bit j = coordinate j).
  std::size_t words() const { return words_; }
  std::span<const std::uint64_t> packed_row(std::size_t r) const {
    return {packed_.data() + r * words_, words_};
  }

  /// Codeword for the given message (length k).
  std::vector<Symbol> encode(std::span<const Symbol> message) const;
  bool contains(std::span<const Symbol> word) const;

  bool operator==(const LinearCode& other) const {
    return q() == other.q() && generator_ == other.generator_;
  }

 private:
  const Field* field_;
  Matrix generator_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> packed_;
};

enum class RankPolicy {
  strict,  ///< rank-deficient input is a parse error
  reduce,  ///< replace the rows by a basis of their span
};

/// Parses matrix text: one generator row per line, single-digit symbols, spaces ignored,
/// blank lines ignored, '#' starts a comment line, a trailing '\' continues a row on the next
/// line.
LinearCode parse_code(std::string_view text, int q, RankPolicy policy = RankPolicy::strict);
LinearCode load_code(const std::filesystem::path& path, int q,
                     RankPolicy policy = RankPolicy::strict);

/// Rows of symbols without rank checks.
Matrix parse_matrix(std::string_view text, int q);

struct Codeword {
  std::vector<Symbol> symbols;

  std::size_t weight() const;
  std::vector<std::size_t> support() const;
  bool is_zero() const { return weight() == 0; }
};

/// Throws BudgetExceeded when q^k exceeds the limit.
void check_enumeration_budget(const LinearCode& code, const EnumerationLimits& limits);

/// Visits all q^k codewords once, in lexicographic order of the message vector (the last
/// message symbol varies fastest), starting with the zero word.
template <class Visitor>
void for_each_codeword(const LinearCode& code, Visitor&& visit,
                       const EnumerationLimits& limits = EnumerationLimits::from_env()) {
  check_enumeration_budget(code, limits);
  const Field& f = code.field();
  const Matrix& g = code.generator();
  const std::size_t k = code.k();
  std::vector<Symbol> message(k, 0);
  Codeword word{std::vector<Symbol>(code.n(), 0)};
  const std::uint64_t total = code.size();
  for (std::uint64_t i = 0;; ++i) {
    visit(static_cast<const Codeword&>(word));
    if (i + 1 == total) break;
    for (std::size_t d = k; d-- > 0;) {
      const Symbol old = message[d];
      const Symbol next = static_cast<Symbol>((old + 1) % f.q());
      message[d] = next;
      const Symbol delta = f.sub(next, old);
      auto row = g.row(d);
      for (std::size_t j = 0; j < word.symbols.size(); ++j)
        word.symbols[j] = f.add(word.symbols[j], f.mul(delta, row[j]));
      if (next != 0) break;
    }
  }
}

std::vector<Codeword> codewords(const LinearCode& code,
                                const EnumerationLimits& limits = EnumerationLimits::from_env());

/// Codeword counts by weight, including weight 0.
class WeightEnumerator {
 public:
  WeightEnumerator(std::size_t n, std::size_t k, int q, std::vector<BigInt> counts);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  int q() const { return q_; }
  const std::vector<BigInt>& counts() const { return counts_; }
  const BigInt& operator[](std::size_t w) const { return counts_.at(w); }

  /// Weights w > 0 with a nonzero count, ascending.
  std::vector<std::size_t> nonzero_weights() const;
  /// Smallest / largest nonzero weight; 0 for the zero code.
  std::size_t min_weight() const;
  std::size_t max_weight() const;
  BigInt total() const;

  /// Polynomial form, e.g. "1+7x^3+7x^4+x^7".
  std::string to_string() const;

  bool operator==(const WeightEnumerator&) const = default;

 private:
  std::size_t n_;
  std::size_t k_;
  int q_;
  std::vector<BigInt> counts_;
};

WeightEnumerator weight_enumerator(const LinearCode& code,
                                   const EnumerationLimits& limits = EnumerationLimits::from_env());

/// Minimum nonzero weight.
std::size_t min_distance(const LinearCode& code,
                         const EnumerationLimits& limits = EnumerationLimits::from_env());

/// Restriction to the coordinates outside supp(c), reduced to its actual dimension.
LinearCode residual_code(const LinearCode& code, const Codeword& c);

/// Deletes one coordinate. Throws std::invalid_argument naming the position on a rank drop.
LinearCode puncture(const LinearCode& code, std::size_t position);

/// Binary codes only: appends a column making every generator row even.
LinearCode parity_extend(const LinearCode& code);

/// Repeats every column t times in place (column j becomes columns jt .. jt+t-1).
LinearCode replicate(const LinearCode& code, std::size_t t);

LinearCode drop_zero_columns(const LinearCode& code);

/// The dual [n, n-k] code. Throws std::invalid_argument when k = n (the dual is zero).
LinearCode dual_code(const LinearCode& code);

/// Enumerator of the dual code by the MacWilliams transform in exact integer arithmetic.
/// Throws std::invalid_argument when a coefficient is not integral, which means the input was
/// not the enumerator of a linear code.
WeightEnumerator macwilliams_dual(const WeightEnumerator& we);

}  // namespace mincodes
