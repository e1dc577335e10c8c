#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "spcsp/rational.hpp"

namespace spcsp::linalg {

// Row over GF(2).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int width) : width_(width), words_((width + 63) / 64, 0) {}

  int width() const { return width_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v);
  void flip(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
  bool any() const;
  int first() const;  // -1 when zero
  BitRow& operator^=(const BitRow& o);
  bool dot(const BitRow& o) const;
  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  int width_ = 0;
  std::vector<uint64_t> words_;
};

struct Gf2Equation {
  BitRow lhs;
  bool rhs = false;
};

// Some solution (free variables 0), or nullopt if inconsistent.
std::optional<std::vector<uint8_t>> solve_gf2(std::vector<Gf2Equation> eqs, int vars);

// Equations whose solution set is exactly the affine span of base + span(directions).
std::vector<Gf2Equation> affine_equations(const BitRow& base, const std::vector<BitRow>& directions);

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Integer solution y of A y = b, or nullopt. Uses unimodular column operations
// to reach a lower echelon (Hermite-style) form.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a, const std::vector<mpz_class>& b,
                                                    int columns);

using RatMatrix = std::vector<std::vector<mpq_class>>;

// A point x >= 0 with A x = b, or nullopt. Phase-one simplex with Bland's rule.
std::optional<std::vector<mpq_class>> feasible_point(const RatMatrix& a, const std::vector<mpq_class>& b,
                                                     int columns);

}  // namespace spcsp::linalg
