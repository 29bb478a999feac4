#include "mincodes/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "mincodes/kernels.hpp"

namespace mincodes {

EnumerationLimits EnumerationLimits::from_env() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("MINCODES_MAX_CODEWORDS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_codewords = v;
  }
  return limits;
}

LinearCode::LinearCode(Matrix generator, int q)
    : field_(&Field::get(q)), generator_(std::move(generator)) {
  if (generator_.empty()) throw std::invalid_argument("empty generator matrix");
  if (generator_.rows() > generator_.cols())
    throw std::invalid_argument("generator has more rows than columns");
  for (std::size_t r = 0; r < generator_.rows(); ++r)
    for (Symbol s : generator_.row(r))
      if (!field_->valid(s)) throw std::invalid_argument("symbol outside GF(q)");
  const std::size_t rk = rank(generator_, *field_);
  if (rk != generator_.rows()) {
    throw std::invalid_argument("generator rows are dependent (rank " + std::to_string(rk) +
                                " < " + std::to_string(generator_.rows()) + ")");
  }
  if (q == 2) {
    words_ = (n() + 63) / 64;
    packed_.assign(k() * words_, 0);
    for (std::size_t r = 0; r < k(); ++r)
      for (std::size_t j = 0; j < n(); ++j)
        if (generator_(r, j)) packed_[r * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
}

Matrix LinearCode::standard_form() const { return row_reduce(generator_, *field_).reduced; }

std::uint64_t LinearCode::size() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q()))
      return std::numeric_limits<std::uint64_t>::max();
    total *= static_cast<std::uint64_t>(q());
  }
  return total;
}

std::vector<Symbol> LinearCode::encode(std::span<const Symbol> message) const {
  if (message.size() != k()) throw std::invalid_argument("message length differs from k");
  std::vector<Symbol> out(n(), 0);
  for (std::size_t r = 0; r < k(); ++r) {
    if (message[r] == 0) continue;
    auto row = generator_.row(r);
    for (std::size_t j = 0; j < n(); ++j) out[j] = field_->add(out[j], field_->mul(message[r], row[j]));
  }
  return out;
}

bool LinearCode::contains(std::span<const Symbol> word) const {
  if (word.size() != n()) return false;
  Matrix extended = generator_;
  extended.append_row(word);
  return rank(extended, *field_) == k();
}

Matrix parse_matrix(std::string_view text, int q) {
  const Field& field = Field::get(q);
  std::vector<std::vector<Symbol>> rows;
  std::vector<Symbol> current;
  std::size_t current_line = 0;
  std::size_t line_no = 0;
  bool continuing = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (continuing && first != std::string_view::npos)
        throw ParseError("comment inside a continued row", line_no, first + 1);
      if (pos > text.size()) break;
      continue;
    }
    if (!continuing) current_line = line_no;
    continuing = false;
    for (std::size_t c = first; c < line.size(); ++c) {
      const char ch = line[c];
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (ch == '\\') {
        if (line.find_first_not_of(" \t\r", c + 1) != std::string_view::npos)
          throw ParseError("continuation marker must end the line", line_no, c + 1);
        continuing = true;
        break;
      }
      if (ch < '0' || ch > '9')
        throw ParseError(std::string("unexpected character '") + ch + "'", line_no, c + 1);
      const int v = ch - '0';
      if (!field.valid(static_cast<Symbol>(v))) {
        throw ParseError("symbol " + std::to_string(v) + " is not in GF(" + std::to_string(q) + ")",
                         line_no, c + 1);
      }
      current.push_back(static_cast<Symbol>(v));
    }
    if (!continuing) {
      if (!rows.empty() && current.size() != rows.front().size()) {
        throw ParseError("row has " + std::to_string(current.size()) + " symbols, expected " +
                             std::to_string(rows.front().size()),
                         current_line, 1);
      }
      rows.push_back(std::move(current));
      current.clear();
    }
    if (pos > text.size()) break;
  }
  if (continuing) throw ParseError("input ends inside a continued row", line_no, 1);
  if (rows.empty()) throw ParseError("no matrix rows", line_no, 1);
  return Matrix::from_rows(rows);
}

LinearCode parse_code(std::string_view text, int q, RankPolicy policy) {
  Matrix m = parse_matrix(text, q);
  const Field& field = Field::get(q);
  const RowEchelon e = row_reduce(m, field);
  if (e.pivots.size() < m.rows()) {
    if (policy == RankPolicy::strict) {
      throw ParseError("rows are linearly dependent (rank " + std::to_string(e.pivots.size()) +
                           " < " + std::to_string(m.rows()) + " rows)",
                       1, 1);
    }
    if (e.pivots.empty()) throw ParseError("matrix has rank 0", 1, 1);
    return LinearCode(e.reduced, q);
  }
  return LinearCode(std::move(m), q);
}

LinearCode load_code(const std::filesystem::path& path, int q, RankPolicy policy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str(), q, policy);
}

std::size_t Codeword::weight() const {
  return static_cast<std::size_t>(std::count_if(symbols.begin(), symbols.end(),
                                                [](Symbol s) { return s != 0; }));
}

std::vector<std::size_t> Codeword::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] != 0) out.push_back(i);
  return out;
}

void check_enumeration_budget(const LinearCode& code, const EnumerationLimits& limits) {
  if (code.size() > limits.max_codewords) {
    throw BudgetExceeded("q^k", code.size(), limits.max_codewords,
                         "raise MINCODES_MAX_CODEWORDS or --max-codewords");
  }
}

std::vector<Codeword> codewords(const LinearCode& code, const EnumerationLimits& limits) {
  std::vector<Codeword> out;
  check_enumeration_budget(code, limits);
  out.reserve(code.size());
  for_each_codeword(code, [&](const Codeword& c) { out.push_back(c); }, limits);
  return out;
}

WeightEnumerator::WeightEnumerator(std::size_t n, std::size_t k, int q, std::vector<BigInt> counts)
    : n_(n), k_(k), q_(q), counts_(std::move(counts)) {
  counts_.resize(n_ + 1, 0);
}

std::vector<std::size_t> WeightEnumerator::nonzero_weights() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 1; w < counts_.size(); ++w)
    if (counts_[w] != 0) out.push_back(w);
  return out;
}

std::size_t WeightEnumerator::min_weight() const {
  for (std::size_t w = 1; w < counts_.size(); ++w)
    if (counts_[w] != 0) return w;
  return 0;
}

std::size_t WeightEnumerator::max_weight() const {
  for (std::size_t w = counts_.size(); w-- > 1;)
    if (counts_[w] != 0) return w;
  return 0;
}

BigInt WeightEnumerator::total() const {
  BigInt sum = 0;
  for (const auto& c : counts_) sum += c;
  return sum;
}

std::string WeightEnumerator::to_string() const {
  std::string out;
  for (std::size_t w = 0; w < counts_.size(); ++w) {
    if (counts_[w] == 0) continue;
    if (!out.empty()) out += '+';
    const bool unit = counts_[w] == 1;
    if (w == 0 || !unit) out += counts_[w].str();
    if (w == 1) out += "x";
    else if (w > 1) out += "x^" + std::to_string(w);
  }
  return out.empty() ? "0" : out;
}

WeightEnumerator weight_enumerator(const LinearCode& code, const EnumerationLimits& limits) {
  check_enumeration_budget(code, limits);
  const std::vector<std::uint64_t> hist = kernels::parallel::weight_histogram(code);
  std::vector<BigInt> counts(hist.begin(), hist.end());
  return WeightEnumerator(code.n(), code.k(), code.q(), std::move(counts));
}

std::size_t min_distance(const LinearCode& code, const EnumerationLimits& limits) {
  return weight_enumerator(code, limits).min_weight();
}

LinearCode residual_code(const LinearCode& code, const Codeword& c) {
  if (c.is_zero()) throw std::invalid_argument("residual code needs a nonzero codeword");
  if (!code.contains(c.symbols)) throw std::invalid_argument("word is not a codeword");
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < c.symbols.size(); ++j)
    if (c.symbols[j] == 0) outside.push_back(j);
  if (outside.empty()) throw std::invalid_argument("codeword has full support; residual is empty");
  const Matrix restricted = code.generator().select_columns(outside);
  const RowEchelon e = row_reduce(restricted, code.field());
  if (e.pivots.empty()) throw std::invalid_argument("residual code is the zero code");
  return LinearCode(e.reduced, code.q());
}

LinearCode puncture(const LinearCode& code, std::size_t position) {
  if (position >= code.n()) throw std::out_of_range("puncture position out of range");
  if (code.n() == 1) throw std::invalid_argument("cannot puncture a length-1 code");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < code.n(); ++j)
    if (j != position) keep.push_back(j);
  Matrix m = code.generator().select_columns(keep);
  if (rank(m, code.field()) < code.k()) {
    throw std::invalid_argument("puncturing at position " + std::to_string(position) +
                                " drops the rank");
  }
  return LinearCode(std::move(m), code.q());
}

LinearCode parity_extend(const LinearCode& code) {
  if (code.q() != 2) throw std::invalid_argument("parity extension needs q = 2");
  const Matrix& g = code.generator();
  Matrix m(g.rows(), g.cols() + 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Symbol parity = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      m(r, j) = g(r, j);
      parity ^= g(r, j);
    }
    m(r, g.cols()) = parity;
  }
  return LinearCode(std::move(m), 2);
}

LinearCode replicate(const LinearCode& code, std::size_t t) {
  if (t == 0) throw std::invalid_argument("replication factor must be positive");
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < code.n(); ++j)
    for (std::size_t i = 0; i < t; ++i) cols.push_back(j);
  return LinearCode(code.generator().select_columns(cols), code.q());
}

LinearCode drop_zero_columns(const LinearCode& code) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < code.n(); ++j) {
    bool nonzero = false;
    for (std::size_t r = 0; r < code.k() && !nonzero; ++r) nonzero = code.generator()(r, j) != 0;
    if (nonzero) keep.push_back(j);
  }
  return LinearCode(code.generator().select_columns(keep), code.q());
}

LinearCode dual_code(const LinearCode& code) {
  Matrix basis = null_space(code.generator(), code.field());
  if (basis.rows() == 0) throw std::invalid_argument("the dual of a full code is the zero code");
  return LinearCode(std::move(basis), code.q());
}

WeightEnumerator macwilliams_dual(const WeightEnumerator& we) {
  const std::size_t n = we.n();
  const int q = we.q();
  if (we.k() > n) throw std::invalid_argument("enumerator has k > n");
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  std::vector<BigInt> qm1_pow(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) qm1_pow[i] = qm1_pow[i - 1] * (q - 1);
  BigInt scale = 1;
  for (std::size_t i = 0; i < we.k(); ++i) scale *= q;

  std::vector<BigInt> dual(n + 1, 0);
  for (std::size_t w = 0; w <= n; ++w) {
    if (we[w] == 0) continue;
    // Krawtchouk K_j(w) = sum_i (-1)^i (q-1)^(j-i) C(w,i) C(n-w,j-i).
    for (std::size_t j = 0; j <= n; ++j) {
      BigInt kj = 0;
      for (std::size_t i = 0; i <= std::min(w, j); ++i) {
        if (j - i > n - w) continue;
        BigInt term = qm1_pow[j - i] * binom[w][i] * binom[n - w][j - i];
        if (i % 2) kj -= term;
        else kj += term;
      }
      dual[j] += we[w] * kj;
    }
  }
  for (std::size_t j = 0; j <= n; ++j) {
    if (dual[j] % scale != 0 || dual[j] < 0) {
      throw std::invalid_argument("MacWilliams transform has a non-integral coefficient at weight " +
                                  std::to_string(j));
    }
    dual[j] /= scale;
  }
  return WeightEnumerator(n, n - we.k(), q, std::move(dual));
}

}  // namespace mincodes
