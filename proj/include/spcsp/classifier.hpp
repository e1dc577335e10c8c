#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spcsp/model.hpp"
#include "spcsp/orbit.hpp"
#include "spcsp/relax.hpp"

namespace spcsp {

enum class ObstructionKind { MiddleGap, NonReflexive, ConflictingSlopes };

struct ThresholdObstruction {
  ObstructionKind kind = ObstructionKind::MiddleGap;
  // MiddleGap: a < b < c in pair. NonReflexive: a in I, a not in J.
  size_t pair = 0;
  int a = 0, b = 0, c = 0;
  // ConflictingSlopes: L = a/b from lower_pair exceeds U = (c-d)/(m-d) from upper_pair.
  size_t lower_pair = 0, upper_pair = 0;
  int d = 0, m = 0;
  Rational lower, upper;

  std::string describe() const;
};

using ThresholdResult = std::variant<Rational, ThresholdObstruction>;

ThresholdResult exists_threshold(const Template& t);

enum class Verdict { Tractable, NPComplete };

// Fixed order: Const0, Const1, Max, Min, AT, Xor, Thr, then complements.
struct FamilyVerdict {
  Family family;
  bool included = false;
  std::optional<FamilyWitness> witness;             // failing (pair, weight)
  std::optional<ThresholdObstruction> obstruction;  // Thr entries
};

struct HardnessCertificate {
  std::vector<FamilyVerdict> families;
  std::optional<ArelWitness> arel;
  std::optional<CrelWitness> crel;
  std::optional<NoAtWitness> no_at;
  std::string no_at_note;
  Template closure;  // template the derivations refer to
};

struct Classification {
  Verdict verdict = Verdict::NPComplete;
  UnaryMapSet homomorphisms;
  std::optional<Family> witness;
  std::vector<FamilyVerdict> families;
  std::optional<HardnessCertificate> certificate;

  bool tractable() const { return verdict == Verdict::Tractable; }
  std::vector<Family> included() const;
};

Classification classify(const Template& t);

struct ConsistencyReport {
  bool consistent = true;
  size_t polymorphisms = 0;
  int max_antichain = 0;        // largest disjoint oneset or zeroset family seen
  int min_fixing_set = -1;      // smallest fixing set seen, -1 if none
  std::vector<std::string> contradictions;
};

ConsistencyReport hardness_consistency_check(const Template& t, const HardnessCertificate& cert,
                                             int max_arity = 4);

}  // namespace spcsp
