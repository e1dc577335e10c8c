#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spcsp {

inline constexpr int kMaxFunctionArity = 16;

// Subset of argument indices {0, ..., k-1}; bit i set iff argument i is 1.
using VarSet = uint32_t;

inline VarSet full_varset(int k) { return k >= 32 ? ~VarSet{0} : ((VarSet{1} << k) - 1); }

// Truth table of a Boolean function of arity 1..16. Entry m is f evaluated on
// the argument set whose members are the 1-bits of m.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  explicit BooleanFunction(int arity);  // constant 0

  static BooleanFunction from_predicate(int arity, const std::function<bool(VarSet)>& pred);
  // Hex digits of the table read as one big number, entry 0 least significant.
  static BooleanFunction from_hex(const std::string& hex, int arity);
  static BooleanFunction from_words(int arity, std::vector<uint64_t> words);

  int arity() const { return arity_; }
  uint64_t table_size() const { return uint64_t{1} << arity_; }
  const std::vector<uint64_t>& words() const { return words_; }

  bool operator()(VarSet u) const { return (words_[u >> 6] >> (u & 63)) & 1u; }
  bool eval(const std::vector<uint8_t>& x) const;
  void set(VarSet u, bool value);

  std::string to_hex() const;

  // 1 - f
  BooleanFunction negated() const;
  // x -> 1 - f(1 - x)
  BooleanFunction dual() const;

  bool is_idempotent() const { return !(*this)(0) && (*this)(full_varset(arity_)); }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
  friend bool operator<(const BooleanFunction& a, const BooleanFunction& b);

 private:
  int arity_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace spcsp
