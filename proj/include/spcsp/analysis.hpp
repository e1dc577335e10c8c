#pragma once

#include <optional>
#include <vector>

#include "spcsp/boolean_function.hpp"
#include "spcsp/model.hpp"
#include "spcsp/rational.hpp"

namespace spcsp {

// Constructors. Arguments are 0-based: at(2k+1) compares x_0..x_{k-1}
// against x_k..x_{2k}; almost_negation(m) negates x_{m-1}.
BooleanFunction make_max(int k);
BooleanFunction make_min(int k);
BooleanFunction make_xor(int k);
BooleanFunction make_at(int arity);
BooleanFunction make_thr(const Rational& q, int k);
BooleanFunction make_almost_negation(int m);
BooleanFunction make_const(bool value, int k);
BooleanFunction make_projection(int k, int i);

struct MinorMap {
  int target_arity = 0;
  std::vector<int> map;  // map[i] = target coordinate feeding source argument i
};

// g(y) = f(y_{map[0]}, ..., y_{map[m-1]}). Throws ArityMismatch.
BooleanFunction minor(const BooleanFunction& f, const MinorMap& pi);
// Map equivalent to applying pi, then sigma: minor(minor(f, pi), sigma).
MinorMap compose(const MinorMap& pi, const MinorMap& sigma);

// Arguments outside U are fixed to 0; the i-th member of U becomes argument i.
BooleanFunction restrict_to(const BooleanFunction& f, VarSet u);

std::vector<VarSet> onesets(const BooleanFunction& f);
std::vector<VarSet> zerosets(const BooleanFunction& f);
std::vector<VarSet> minimal_onesets(const BooleanFunction& f);
std::vector<VarSet> minimal_zerosets(const BooleanFunction& f);

bool is_oneset(const BooleanFunction& f, VarSet u);
bool is_zeroset(const BooleanFunction& f, VarSet u);
bool is_onefix(const BooleanFunction& f, VarSet u);
bool is_zerofix(const BooleanFunction& f, VarSet u);

// Flags for every subset: entry u is true iff u is a onefset (zerofset).
std::vector<bool> onefix_table(const BooleanFunction& f);
std::vector<bool> zerofix_table(const BooleanFunction& f);

enum class FixKind { One, Zero };

struct FixingSet {
  FixKind kind = FixKind::One;
  VarSet set = 0;
};

std::optional<FixingSet> smallest_fixing_set(const BooleanFunction& f);
std::optional<VarSet> smallest_onefset(const BooleanFunction& f);
std::optional<VarSet> smallest_zerofset(const BooleanFunction& f);

// Lexicographic order on sorted member lists.
bool lex_less(VarSet a, VarSet b);
std::vector<int> members(VarSet u);

struct Packing {
  // The empty set qualifies, so arbitrarily many copies are pairwise disjoint.
  bool unbounded = false;
  std::vector<VarSet> sets;
  size_t size() const { return sets.size(); }
};

Packing max_disjoint_onesets(const BooleanFunction& f);
Packing max_disjoint_zerosets(const BooleanFunction& f);
// Maximum family of pairwise disjoint sets from candidates, none of them empty.
std::vector<VarSet> max_set_packing(std::vector<VarSet> candidates);

struct WitnessMatrix {
  std::vector<std::vector<uint8_t>> rows;  // k arguments, each of length n
  std::vector<uint8_t> output;
  int output_weight() const;
};

// Output weights of f over all argument matrices whose rows have weights in I.
WeightSet output_weights(const BooleanFunction& f, const WeightSet& i);
std::optional<WitnessMatrix> find_witness(const BooleanFunction& f, const RelationPair& pair);
inline bool is_compatible(const BooleanFunction& f, const RelationPair& pair) {
  return !find_witness(f, pair).has_value();
}

struct PolymorphismFailure {
  size_t pair = 0;
  WitnessMatrix witness;
};

std::optional<PolymorphismFailure> polymorphism_failure(const BooleanFunction& f, const Template& t);
inline bool is_polymorphism(const BooleanFunction& f, const Template& t) {
  return !polymorphism_failure(f, t).has_value();
}

// Classes of arguments that f is invariant under permuting.
std::vector<std::vector<int>> symmetry_classes(const BooleanFunction& f);

struct EnumerateOptions {
  int jobs = 1;
  bool allow_arity5 = false;
};

std::vector<BooleanFunction> enumerate_polymorphisms(const Template& t, int k,
                                                     const EnumerateOptions& opts = {});
size_t count_polymorphisms(const Template& t, int k, const EnumerateOptions& opts = {});

// Distinct argument matrices up to column order: column patterns with multiplicity.
struct ColumnMultiset {
  std::vector<std::pair<VarSet, int>> columns;
};

std::vector<ColumnMultiset> column_multisets(int k, const WeightSet& i);

enum class StarSide { One, Zero };

bool is_star_compatible(const BooleanFunction& f, const RelationPair& pair, StarSide side);

enum class FlipKind { One, Zero, Both };

bool is_e_flippable(const BooleanFunction& f, int e, FlipKind kind);

struct VariableDistribution {
  VarSet support = 0;
  std::vector<Rational> probability;  // one entry per argument
};

VariableDistribution variable_distribution(const BooleanFunction& f, int size_bound);

}  // namespace spcsp
