#include "garside/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "json.hpp"

namespace garside {

namespace {

void validate_shape(int n, const std::vector<int>& perm, const std::vector<Exp>& exps) {
  if (n < 2) throw std::invalid_argument("matrix dimension must be >= 2");
  if (perm.size() != static_cast<std::size_t>(n) || exps.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("perm/exps size does not match dimension");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int c : perm) {
    if (c < 1 || c > n || seen[static_cast<std::size_t>(c) - 1])
      throw std::invalid_argument("perm is not a permutation of 1..n");
    seen[static_cast<std::size_t>(c) - 1] = true;
  }
  Exp sum = 0;
  for (Exp e : exps) sum = detail::checked_add(sum, e);
  if (sum != 0) throw std::invalid_argument("exponents must sum to zero");
}

}  // namespace

MonomialMatrix::MonomialMatrix(int n, std::vector<int> perm, std::vector<Exp> exps)
    : n_(n), perm_(std::move(perm)), exps_(std::move(exps)) {
  validate_shape(n_, perm_, exps_);
}

MonomialMatrix MonomialMatrix::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  return MonomialMatrix(n, std::move(perm), std::vector<Exp>(static_cast<std::size_t>(n), 0));
}

int MonomialMatrix::row_of_col(int c) const {
  for (int r = 1; r <= n_; ++r)
    if (col(r) == c) return r;
  throw std::invalid_argument("column index out of range");
}

bool MonomialMatrix::is_identity() const {
  if (!is_diagonal()) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e == 0; });
}

bool MonomialMatrix::is_diagonal() const {
  for (int r = 1; r <= n_; ++r)
    if (col(r) != r) return false;
  return true;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("dimension mismatch");
  std::vector<int> perm(static_cast<std::size_t>(n_));
  std::vector<Exp> exps(static_cast<std::size_t>(n_));
  for (std::size_t r = 0; r < static_cast<std::size_t>(n_); ++r) {
    std::size_t mid = static_cast<std::size_t>(perm_[r]) - 1;
    perm[r] = rhs.perm_[mid];
    exps[r] = detail::checked_add(exps_[r], rhs.exps_[mid]);
  }
  return MonomialMatrix(n_, std::move(perm), std::move(exps));
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<int> perm(static_cast<std::size_t>(n_));
  std::vector<Exp> exps(static_cast<std::size_t>(n_));
  for (int r = 1; r <= n_; ++r) {
    int c = col(r);
    perm[static_cast<std::size_t>(c) - 1] = r;
    exps[static_cast<std::size_t>(c) - 1] = -exp(r);
  }
  return MonomialMatrix(n_, std::move(perm), std::move(exps));
}

std::size_t MatrixHash::operator()(const MonomialMatrix& m) const {
  std::size_t h = static_cast<std::size_t>(m.dim());
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (int c : m.perm()) mix(static_cast<std::size_t>(c));
  for (Exp e : m.exps()) mix(static_cast<std::size_t>(static_cast<std::uint64_t>(e)));
  return h;
}

Word to_word(const PositiveWord& w) {
  Word out;
  out.reserve(w.size());
  for (Gen g : w) out.push_back(Letter{g, false});
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, !it->inverse});
  return out;
}

MonomialMatrix generator_matrix(Gen g, int n) {
  if (n < 2) throw std::invalid_argument("generator needs dimension >= 2");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Exp> exps(static_cast<std::size_t>(n), 0);
  if (g.kind() == Gen::Kind::T) {
    perm[0] = 2;
    perm[1] = 1;
    exps[0] = -g.index();
    exps[1] = g.index();
  } else {
    int j = static_cast<int>(g.index());
    if (j < 3 || j > n) throw std::invalid_argument("s-generator index out of range for dimension");
    std::swap(perm[static_cast<std::size_t>(j) - 2], perm[static_cast<std::size_t>(j) - 1]);
  }
  return MonomialMatrix(n, std::move(perm), std::move(exps));
}

MonomialMatrix eval_word(const Word& w, int n) {
  MonomialMatrix acc = MonomialMatrix::identity(n);
  for (const Letter& l : w) acc = acc * generator_matrix(l.gen, n);
  return acc;
}

MonomialMatrix eval_word(const PositiveWord& w, int n) {
  MonomialMatrix acc = MonomialMatrix::identity(n);
  for (Gen g : w) acc = acc * generator_matrix(g, n);
  return acc;
}

WordParseError::WordParseError(std::string token_, std::size_t token_index_, std::size_t offset_)
    : std::invalid_argument("unrecognized token '" + token_ + "' (token " +
                            std::to_string(token_index_) + ", offset " + std::to_string(offset_) + ")"),
      token(std::move(token_)),
      token_index(token_index_),
      offset(offset_) {}

namespace {

bool parse_int(std::string_view s, Exp& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    pos = 1;
    if (s.size() == 1) return false;
  }
  Exp v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    if (v > (std::numeric_limits<Exp>::max() - 9) / 10) return false;
    v = v * 10 + (s[pos] - '0');
  }
  out = neg ? -v : v;
  return true;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  std::size_t token_index = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    ++token_index;
    auto fail = [&]() -> WordParseError {
      return WordParseError(std::string(tok), token_index, start);
    };

    if (tok == "e") continue;
    std::string_view body = tok;
    bool inv = false;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      inv = true;
      body.remove_suffix(3);
    }
    Exp idx = 0;
    if (body.size() >= 4 && body[0] == 't' && body[1] == '[' && body.back() == ']') {
      if (!parse_int(body.substr(2, body.size() - 3), idx)) throw fail();
      out.push_back(Letter{Gen::t(idx), inv});
    } else if (body.size() >= 2 && body[0] == 's') {
      if (!parse_int(body.substr(1), idx) || idx < 2) throw fail();
      out.push_back(Letter{Gen::s(static_cast<int>(idx)), inv});
    } else {
      throw fail();
    }
  }
  return out;
}

std::string to_string(Gen g) {
  if (g.kind() == Gen::Kind::T) return "t[" + std::to_string(g.index()) + "]";
  return "s" + std::to_string(g.index());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i].gen);
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

std::string to_string(const PositiveWord& w) { return to_string(to_word(w)); }

std::string to_json(const MonomialMatrix& m) {
  nlohmann::json j;
  j["n"] = m.dim();
  j["perm"] = m.perm();
  j["exps"] = m.exps();
  return j.dump();
}

MonomialMatrix matrix_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("perm") || !j.contains("exps"))
    throw std::invalid_argument("matrix JSON needs fields n, perm, exps");
  try {
    int n = j.at("n").get<int>();
    auto perm = j.at("perm").get<std::vector<int>>();
    auto exps = j.at("exps").get<std::vector<Exp>>();
    return MonomialMatrix(n, std::move(perm), std::move(exps));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid matrix JSON: ") + e.what());
  }
}

}  // namespace garside
