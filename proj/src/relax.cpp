#include "spcsp/relax.hpp"

#include "spcsp/error.hpp"
#include "spcsp/orbit.hpp"

namespace spcsp {

std::string RelaxationStep::str() const {
  switch (kind) {
    case StepKind::StrictRelax: return "strict:" + strict.str() + "/" + relaxed.str();
    case StepKind::MoveLeft: return "move-left";
    case StepKind::MoveRight: return "move-right";
    case StepKind::Flip: return "flip";
  }
  return "?";
}

RelationPair strict_relax(const RelationPair& pair, const WeightSet& i, const WeightSet& j) {
  if (i.bound() != pair.arity() || j.bound() != pair.arity())
    throw Error(ErrorCode::NotARelaxation, "relaxed sets have a different arity");
  if (!i.subset_of(pair.strict) || !pair.relaxed.subset_of(j))
    throw Error(ErrorCode::NotARelaxation,
                i.str() + "/" + j.str() + " is not a strict relaxation of " + pair.str());
  return RelationPair(i, j);
}

namespace {

WeightSet left_shift(const WeightSet& s) {
  return WeightSet(s.bound() - 1, s.mask() >> 1);
}

}  // namespace

RelationPair move_left(const RelationPair& pair) {
  if (pair.arity() < 2) throw Error(ErrorCode::ArityUnderflow, "cannot move left at arity 1");
  return RelationPair(left_shift(pair.strict), left_shift(pair.relaxed));
}

RelationPair move_right(const RelationPair& pair) {
  if (pair.arity() < 2) throw Error(ErrorCode::ArityUnderflow, "cannot move right at arity 1");
  int n = pair.arity() - 1;
  return RelationPair(pair.strict.rebound(n), pair.relaxed.rebound(n));
}

RelationPair flip_pair(const RelationPair& pair) {
  return RelationPair(pair.strict.reflect(), pair.relaxed.reflect());
}

RelationPair apply_step(const RelationPair& pair, const RelaxationStep& step) {
  switch (step.kind) {
    case StepKind::StrictRelax: return strict_relax(pair, step.strict, step.relaxed);
    case StepKind::MoveLeft: return move_left(pair);
    case StepKind::MoveRight: return move_right(pair);
    case StepKind::Flip: return flip_pair(pair);
  }
  throw Error(ErrorCode::InvalidInput, "unknown relaxation step");
}

Template flip_template(const Template& t) {
  Template out = t;
  for (auto& p : out.pairs) p = flip_pair(p);
  return out;
}

Template flip_codomain(const Template& t) {
  Template out = t;
  for (auto& p : out.pairs) p.relaxed = p.relaxed.reflect();
  return out;
}

Template add_idempotents(const Template& t) {
  Template out = t;
  RelationPair zero = RelationPair::of({0}, {0}, 1);
  RelationPair one = RelationPair::of({1}, {1}, 1);
  if (!out.contains(zero)) out.pairs.push_back(zero);
  if (!out.contains(one)) out.pairs.push_back(one);
  out.idempotent_closure = true;
  return out;
}

RelationPair replay(const Template& t, const Derivation& d) {
  if (d.source >= t.pairs.size()) throw Error(ErrorCode::InvalidInput, "derivation source out of range");
  RelationPair p = t.pairs[d.source];
  for (const auto& s : d.steps) {
    p = apply_step(p, s);
    if (p.strict.empty())
      throw Error(ErrorCode::DegenerateChain, "relaxation chain empties the strict side at " + s.str());
  }
  return p;
}

RelationPair middle_gap_pair(int n) {
  WeightSet j = WeightSet::range(n, 0, n - 2);
  j.insert(n);
  return RelationPair(WeightSet::of(n, {1}), j);
}

RelationPair no_extremes_pair(int d, int n) {
  return RelationPair(WeightSet::of(n, {0, d}), WeightSet::range(n, 0, n - 1));
}

namespace {

Derivation build(const Template& t, size_t source, std::vector<RelaxationStep> steps) {
  Derivation d{source, std::move(steps), {}};
  d.result = replay(t, d);
  return d;
}

WeightSet all_but(int n, int b) {
  WeightSet s = WeightSet::full(n);
  return WeightSet(n, s.mask() & ~(uint64_t{1} << b));
}

void repeat(std::vector<RelaxationStep>& steps, RelaxationStep s, int times) {
  for (int i = 0; i < times; ++i) steps.push_back(s);
}

// <{l}, J> with b not in J, l <= b <= n-1, becomes <1, {0..m-2, m}, m>, m = b-l+2.
std::vector<RelaxationStep> middle_gap_steps(int l, int b, int n) {
  std::vector<RelaxationStep> steps{RelaxationStep::strict_relax(WeightSet::of(n, {l}), all_but(n, b))};
  repeat(steps, RelaxationStep::move_left(), l - 1);
  repeat(steps, RelaxationStep::move_right(), n - b - 1);
  return steps;
}

// <{l1,l2}, J> with b not in J, b > l2, becomes <{0, l2-l1}, {0..m-1}, m>, m = b-l1.
std::vector<RelaxationStep> no_extremes_steps(int l1, int l2, int b, int n) {
  std::vector<RelaxationStep> steps{
      RelaxationStep::strict_relax(WeightSet::of(n, {l1, l2}), all_but(n, b))};
  repeat(steps, RelaxationStep::move_left(), l1);
  repeat(steps, RelaxationStep::move_right(), n - b);
  return steps;
}

std::vector<RelaxationStep> flipped(std::vector<RelaxationStep> steps) {
  steps.insert(steps.begin(), RelaxationStep::flip());
  return steps;
}

}  // namespace

std::optional<ArelWitness> derive_arel_witness(const Template& t) {
  for (size_t p = 0; p < t.pairs.size(); ++p) {
    const auto& pair = t.pairs[p];
    int n = pair.arity();
    for (int a : pair.strict.elements()) {
      if (a >= n) continue;
      for (int b = 0; b < a; ++b) {
        if (pair.relaxed.contains(b)) continue;
        std::vector<RelaxationStep> steps{
            RelaxationStep::strict_relax(WeightSet::of(n, {a}), all_but(n, b))};
        repeat(steps, RelaxationStep::move_right(), n - a - 1);
        repeat(steps, RelaxationStep::move_left(), b);
        return ArelWitness{build(t, p, std::move(steps)), a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<CrelWitness> derive_crel_witness(const Template& t) {
  for (size_t p = 0; p < t.pairs.size(); ++p) {
    const auto& pair = t.pairs[p];
    int n = pair.arity();
    auto el = pair.strict.elements();
    for (auto it = el.rbegin(); it != el.rend(); ++it) {
      int a = *it;
      if (a <= 0) continue;
      for (int b = n; b > a; --b) {
        if (pair.relaxed.contains(b)) continue;
        std::vector<RelaxationStep> steps{
            RelaxationStep::strict_relax(WeightSet::of(n, {a}), all_but(n, b))};
        repeat(steps, RelaxationStep::move_left(), a - 1);
        repeat(steps, RelaxationStep::move_right(), n - b);
        return CrelWitness{build(t, p, std::move(steps)), a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<NoAtWitness> extract_no_at_witness(const Template& t) {
  bool any_failure = false;
  for (size_t p = 0; p < t.pairs.size(); ++p) {
    const auto& pair = t.pairs[p];
    int k = pair.arity();
    const WeightSet& i = pair.strict;
    const WeightSet& j = pair.relaxed;
    if (orbit_at(i).subset_of(j)) continue;
    any_failure = true;
    for (int l : i.elements()) {
      if (l <= 0 || l >= k) continue;
      for (int b = 1; b <= k - 1; ++b) {
        if (j.contains(b)) continue;
        if (b >= l)
          return NoAtWitness{build(t, p, middle_gap_steps(l, b, k)), NoAtShape::MiddleGap, false};
        return NoAtWitness{build(t, p, flipped(middle_gap_steps(k - l, k - b, k))),
                           NoAtShape::MiddleGap, true};
      }
    }
    auto el = i.elements();
    for (size_t x = 0; x < el.size(); ++x)
      for (size_t y = x + 1; y < el.size(); ++y) {
        int l1 = el[x], l2 = el[y];
        if (l1 == 0 && l2 == k) continue;
        for (int b = 0; b <= k; ++b) {
          if (j.contains(b)) continue;
          if (b > l2)
            return NoAtWitness{build(t, p, no_extremes_steps(l1, l2, b, k)), NoAtShape::NoExtremes,
                               false};
          if (b < l1)
            return NoAtWitness{build(t, p, flipped(no_extremes_steps(k - l2, k - l1, k - b, k))),
                               NoAtShape::NoExtremes, true};
        }
      }
  }
  if (any_failure)
    throw Error(ErrorCode::DegenerateChain,
                "AT fails only through weights of I outside J; no witness of either shape");
  return std::nullopt;
}

}  // namespace spcsp
