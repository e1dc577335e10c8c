#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spcsp/model.hpp"

namespace spcsp {

enum class StepKind { StrictRelax, MoveLeft, MoveRight, Flip };

struct RelaxationStep {
  StepKind kind = StepKind::MoveLeft;
  WeightSet strict;   // StrictRelax only
  WeightSet relaxed;  // StrictRelax only

  static RelaxationStep strict_relax(WeightSet i, WeightSet j) { return {StepKind::StrictRelax, i, j}; }
  static RelaxationStep move_left() { return {StepKind::MoveLeft, {}, {}}; }
  static RelaxationStep move_right() { return {StepKind::MoveRight, {}, {}}; }
  static RelaxationStep flip() { return {StepKind::Flip, {}, {}}; }

  std::string str() const;
  friend bool operator==(const RelaxationStep&, const RelaxationStep&) = default;
};

RelationPair strict_relax(const RelationPair& pair, const WeightSet& i, const WeightSet& j);
RelationPair move_left(const RelationPair& pair);
RelationPair move_right(const RelationPair& pair);
RelationPair flip_pair(const RelationPair& pair);
RelationPair apply_step(const RelationPair& pair, const RelaxationStep& step);

Template flip_template(const Template& t);
Template flip_codomain(const Template& t);
Template add_idempotents(const Template& t);

// A pair obtained from t.pairs[source] by a chain of steps.
struct Derivation {
  size_t source = 0;
  std::vector<RelaxationStep> steps;
  RelationPair result;
};

// Re-applies the chain; throws DegenerateChain if an intermediate I is empty.
RelationPair replay(const Template& t, const Derivation& d);

struct ArelWitness {
  Derivation derivation;
  int a = 0, b = 0;  // a in I, b not in J, b < a < n
};

struct CrelWitness {
  Derivation derivation;
  int a = 0, b = 0;  // a in I, b not in J, 0 < a < b
};

enum class NoAtShape { MiddleGap, NoExtremes };

struct NoAtWitness {
  Derivation derivation;
  NoAtShape shape = NoAtShape::MiddleGap;
  bool flipped = false;
};

std::optional<ArelWitness> derive_arel_witness(const Template& t);
std::optional<CrelWitness> derive_crel_witness(const Template& t);
std::optional<NoAtWitness> extract_no_at_witness(const Template& t);

// <1, {0..n-2, n}, n> and <{0,d}, {0..n-1}, n>.
RelationPair middle_gap_pair(int n);
RelationPair no_extremes_pair(int d, int n);

}  // namespace spcsp
