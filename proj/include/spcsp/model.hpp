#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spcsp/weight_set.hpp"

namespace spcsp {

// Symmetric promise pair <I, J, n>. May hold an empty I as an intermediate
// result of relaxation steps; validate_pair rejects it.
struct RelationPair {
  WeightSet strict;
  WeightSet relaxed;

  RelationPair() = default;
  RelationPair(WeightSet i, WeightSet j);
  // Throws OutOfRangeWeight / InvalidArity.
  static RelationPair of(const std::vector<int>& i, const std::vector<int>& j, int n);

  int arity() const { return strict.bound(); }
  std::string str() const;

  friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

void validate_pair(const RelationPair& pair);

enum class UnaryMap : uint8_t { Identity = 1, Negation = 2, Const0 = 4, Const1 = 8 };

class UnaryMapSet {
 public:
  UnaryMapSet() = default;
  explicit UnaryMapSet(uint8_t bits) : bits_(bits) {}
  bool contains(UnaryMap m) const { return bits_ & static_cast<uint8_t>(m); }
  void insert(UnaryMap m) { bits_ |= static_cast<uint8_t>(m); }
  bool empty() const { return bits_ == 0; }
  uint8_t bits() const { return bits_; }
  std::vector<std::string> names() const;
  friend bool operator==(const UnaryMapSet&, const UnaryMapSet&) = default;

 private:
  uint8_t bits_ = 0;
};

struct Template {
  std::vector<RelationPair> pairs;
  bool idempotent_closure = false;

  Template() = default;
  explicit Template(std::vector<RelationPair> p, bool closed = false)
      : pairs(std::move(p)), idempotent_closure(closed) {}

  bool contains(const RelationPair& p) const;
  std::string str() const;

  friend bool operator==(const Template&, const Template&) = default;
};

// The unary maps that are promise homomorphisms; does not throw.
UnaryMapSet unary_homomorphisms(const Template& t);
// Validates every pair and requires a homomorphism. Throws NoPromiseHomomorphism.
UnaryMapSet validate_template(const Template& t);

struct Constraint {
  int pair = 0;
  std::vector<int> scope;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Instance {
  int variables = 0;
  std::vector<Constraint> constraints;
  friend bool operator==(const Instance&, const Instance&) = default;
};

void validate_instance(const Instance& inst, const Template& t);

using Assignment = std::vector<uint8_t>;

enum class Side { A, B };

bool check_assignment(const Instance& inst, const Template& t, const Assignment& x, Side side);

int scope_weight(const Constraint& c, const Assignment& x);

}  // namespace spcsp
