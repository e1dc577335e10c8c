#pragma once

#include <optional>
#include <string>

#include "spcsp/model.hpp"
#include "spcsp/rational.hpp"
#include "spcsp/weight_set.hpp"

namespace spcsp {

enum class FamilyTag { Const0, Const1, Max, Min, AT, Xor, Thr };

struct Family {
  FamilyTag tag = FamilyTag::Const0;
  bool complemented = false;
  Rational q;  // Thr only

  static Family constant(bool one) { return {one ? FamilyTag::Const1 : FamilyTag::Const0, false, {}}; }
  static Family of(FamilyTag tag, bool complemented = false) { return {tag, complemented, {}}; }
  static Family thr(const Rational& q, bool complemented = false);

  std::string name() const;
  friend bool operator==(const Family&, const Family&) = default;
};

const char* family_tag_name(FamilyTag tag);

WeightSet orbit_max(const WeightSet& i);
WeightSet orbit_min(const WeightSet& i);
WeightSet orbit_at(const WeightSet& i);
WeightSet orbit_xor(const WeightSet& i);
WeightSet xor3_achievable(int a, int b, int c, int n);

// Output weights of the arity-m q-threshold applied to tuples with weights in I.
WeightSet thr_output_weights(const Rational& q, const WeightSet& i, int m);

struct ThresholdCheck {
  bool compatible = true;
  bool authoritative = true;  // false when m_bound < 2 r n
  int violating_arity = 0;
  int violating_weight = -1;
};

ThresholdCheck thr_compatible(const Rational& q, const RelationPair& pair,
                              std::optional<int> m_bound = std::nullopt);

// Closed form of the singleton case: weights in (n - (n-a)/(1-q), a/q), plus a.
WeightSet thr_singleton_interval(const Rational& q, int a, int n);

struct FamilyWitness {
  size_t pair = 0;
  int weight = 0;
  friend bool operator==(const FamilyWitness&, const FamilyWitness&) = default;
};

// nullopt when every pair is compatible with the family.
std::optional<FamilyWitness> family_compatible(const Family& fam, const Template& t);

// Orbit of an uncomplemented, non-threshold family.
WeightSet family_orbit(FamilyTag tag, const WeightSet& i);

}  // namespace spcsp
