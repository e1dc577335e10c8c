#include "spcsp/boolean_function.hpp"

#include "spcsp/error.hpp"

namespace spcsp {

namespace {

size_t word_count(int arity) { return arity >= 6 ? (size_t{1} << (arity - 6)) : 1; }

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxFunctionArity)
    throw Error(ErrorCode::InvalidArity,
                "function arity " + std::to_string(arity) + " outside [1, 16]");
}

}  // namespace

BooleanFunction::BooleanFunction(int arity) : arity_(arity) {
  check_arity(arity);
  words_.assign(word_count(arity), 0);
}

BooleanFunction BooleanFunction::from_predicate(int arity,
                                                const std::function<bool(VarSet)>& pred) {
  BooleanFunction f(arity);
  for (VarSet u = 0; u < f.table_size(); ++u)
    if (pred(u)) f.words_[u >> 6] |= uint64_t{1} << (u & 63);
  return f;
}

BooleanFunction BooleanFunction::from_words(int arity, std::vector<uint64_t> words) {
  BooleanFunction f(arity);
  if (words.size() != f.words_.size())
    throw Error(ErrorCode::InvalidInput, "truth table has wrong length");
  if (arity < 6 && (words[0] >> f.table_size()))
    throw Error(ErrorCode::InvalidInput, "truth table has bits beyond 2^arity");
  f.words_ = std::move(words);
  return f;
}

BooleanFunction BooleanFunction::from_hex(const std::string& hex, int arity) {
  BooleanFunction f(arity);
  std::string digits = hex;
  if (digits.size() > 1 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X'))
    digits = digits.substr(2);
  size_t expected = (f.table_size() + 3) / 4;
  if (digits.size() != expected)
    throw Error(ErrorCode::InvalidInput, "hex table for arity " + std::to_string(arity) +
                                             " needs " + std::to_string(expected) + " digits");
  for (size_t i = 0; i < digits.size(); ++i) {
    char c = digits[digits.size() - 1 - i];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw Error(ErrorCode::InvalidInput, std::string("bad hex digit '") + c + "'");
    for (int b = 0; b < 4; ++b) {
      uint64_t m = 4 * i + b;
      if (!((v >> b) & 1)) continue;
      if (m >= f.table_size())
        throw Error(ErrorCode::InvalidInput, "hex table has bits beyond 2^arity");
      f.words_[m >> 6] |= uint64_t{1} << (m & 63);
    }
  }
  return f;
}

std::string BooleanFunction::to_hex() const {
  static const char* digits = "0123456789abcdef";
  size_t n = (table_size() + 3) / 4;
  std::string s(n, '0');
  for (size_t i = 0; i < n; ++i) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      uint64_t m = 4 * i + b;
      if (m < table_size() && (*this)(static_cast<VarSet>(m))) v |= 1 << b;
    }
    s[n - 1 - i] = digits[v];
  }
  return s;
}

bool BooleanFunction::eval(const std::vector<uint8_t>& x) const {
  if (static_cast<int>(x.size()) != arity_)
    throw Error(ErrorCode::ArityMismatch, "argument count does not match arity");
  VarSet u = 0;
  for (int i = 0; i < arity_; ++i)
    if (x[i]) u |= VarSet{1} << i;
  return (*this)(u);
}

void BooleanFunction::set(VarSet u, bool value) {
  uint64_t bit = uint64_t{1} << (u & 63);
  if (value) words_[u >> 6] |= bit;
  else words_[u >> 6] &= ~bit;
}

BooleanFunction BooleanFunction::negated() const {
  BooleanFunction g = *this;
  for (auto& w : g.words_) w = ~w;
  if (arity_ < 6) g.words_[0] &= (uint64_t{1} << table_size()) - 1;
  return g;
}

BooleanFunction BooleanFunction::dual() const {
  VarSet full = full_varset(arity_);
  return from_predicate(arity_, [&](VarSet u) { return !(*this)(full & ~u); });
}

bool operator<(const BooleanFunction& a, const BooleanFunction& b) {
  if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
  for (size_t i = a.words_.size(); i-- > 0;)
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  return false;
}

}  // namespace spcsp
