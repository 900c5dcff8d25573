#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace garside {

using Exp = std::int64_t;

namespace detail {

inline Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

}  // namespace detail

// Element of G(inf,inf,n): an n x n monomial matrix whose nonzero entries are
// integer powers of a fixed indeterminate x and whose entries multiply to 1.
// Row i (1-based) carries x^{exp(i)} in column col(i); everything else is 0.
class MonomialMatrix {
 public:
  MonomialMatrix(int n, std::vector<int> perm, std::vector<Exp> exps);
  static MonomialMatrix identity(int n);

  int dim() const { return n_; }
  int col(int row) const { return perm_[static_cast<std::size_t>(row) - 1]; }
  Exp exp(int row) const { return exps_[static_cast<std::size_t>(row) - 1]; }
  int row_of_col(int c) const;

  bool is_identity() const;
  bool is_diagonal() const;

  MonomialMatrix operator*(const MonomialMatrix& rhs) const;
  MonomialMatrix inverse() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

  const std::vector<int>& perm() const { return perm_; }
  const std::vector<Exp>& exps() const { return exps_; }

 private:
  int n_;
  std::vector<int> perm_;   // perm_[i-1] = column of row i's entry, 1-based
  std::vector<Exp> exps_;   // exps_[i-1] = exponent of row i's entry
};

struct MatrixHash {
  std::size_t operator()(const MonomialMatrix& m) const;
};

// Generator of the presentation: t(i) for i in Z, s(j) for 3 <= j <= n.
// s(2) is an alias for t(0).
class Gen {
 public:
  enum class Kind : std::uint8_t { T, S };

  static Gen t(Exp i) { return Gen(Kind::T, i); }
  static Gen s(int j) {
    if (j == 2) return t(0);
    if (j < 3) throw std::invalid_argument("s-generator index must be >= 2");
    return Gen(Kind::S, j);
  }

  Kind kind() const { return kind_; }
  Exp index() const { return index_; }

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;

 private:
  Gen(Kind k, Exp i) : kind_(k), index_(i) {}
  Kind kind_;
  Exp index_;
};

struct Letter {
  Gen gen;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using PositiveWord = std::vector<Gen>;
using Word = std::vector<Letter>;

Word to_word(const PositiveWord& w);
Word inverse_word(const Word& w);

MonomialMatrix generator_matrix(Gen g, int n);

// Generators are involutions in G, so letter signs do not affect the image.
MonomialMatrix eval_word(const Word& w, int n);
MonomialMatrix eval_word(const PositiveWord& w, int n);

// Word grammar: whitespace-separated tokens `t[i]`, `s3`.. `s<n>`, each with an
// optional `^-1` suffix; the single token `e` denotes the empty word.
struct WordParseError : std::invalid_argument {
  WordParseError(std::string token, std::size_t token_index, std::size_t offset);
  std::string token;
  std::size_t token_index;  // 1-based position among tokens
  std::size_t offset;       // 0-based character offset in the input
};

Word parse_word(std::string_view text);
std::string to_string(Gen g);
std::string to_string(const Word& w);
std::string to_string(const PositiveWord& w);

// JSON form: {"n": int, "perm": [int...], "exps": [int...]}, 1-based perm.
std::string to_json(const MonomialMatrix& m);
MonomialMatrix matrix_from_json(std::string_view text);

}  // namespace garside
