#include "spcsp/classifier.hpp"

#include <algorithm>
#include <bit>

#include "spcsp/analysis.hpp"
#include "spcsp/error.hpp"

namespace spcsp {

std::string ThresholdObstruction::describe() const {
  auto s = [](auto v) { return std::to_string(v); };
  switch (kind) {
    case ObstructionKind::MiddleGap:
      return "pair " + s(pair) + ": " + s(a) + "," + s(c) + " in I but " + s(b) + " not in J";
    case ObstructionKind::NonReflexive:
      return "pair " + s(pair) + ": weight " + s(a) + " in I but not in J";
    case ObstructionKind::ConflictingSlopes:
      return "lower bound " + lower.str() + " (pair " + s(lower_pair) + ") exceeds upper bound " +
             upper.str() + " (pair " + s(upper_pair) + ")";
  }
  return "?";
}

ThresholdResult exists_threshold(const Template& t) {
  std::optional<Rational> lo, hi;
  ThresholdObstruction best;
  for (size_t p = 0; p < t.pairs.size(); ++p) {
    const auto& pair = t.pairs[p];
    int n = pair.arity();
    const WeightSet& i = pair.strict;
    const WeightSet& j = pair.relaxed;
    WeightSet nonrefl = i.intersect(j.complement());
    if (!nonrefl.empty()) {
      ThresholdObstruction o;
      o.kind = ObstructionKind::NonReflexive;
      o.pair = p;
      o.a = nonrefl.min();
      return o;
    }
    for (int b : j.complement().elements()) {
      int a = i.max_at_most(b - 1);
      int c = i.min_at_least(b + 1);
      if (a >= 0 && c >= 0 && !(a == 0 && c == n)) {
        ThresholdObstruction o;
        o.kind = ObstructionKind::MiddleGap;
        o.pair = p;
        o.a = a;
        o.b = b;
        o.c = c;
        return o;
      }
    }
    for (int a : i.elements())
      for (int b : j.complement().elements()) {
        if (b > a) {
          Rational l(a, b);
          if (!lo || l > *lo) {
            lo = l;
            best.lower_pair = p;
            best.a = a;
            best.b = b;
          }
        } else if (b < a) {
          Rational u(a - b, n - b);
          if (!hi || u < *hi) {
            hi = u;
            best.upper_pair = p;
            best.c = a;
            best.d = b;
            best.m = n;
          }
        }
      }
  }
  Rational l = lo ? *lo : Rational(0);
  Rational u = hi ? *hi : Rational(1);
  if (l > u) {
    best.kind = ObstructionKind::ConflictingSlopes;
    best.lower = l;
    best.upper = u;
    return best;
  }
  Rational q = l == u ? l : (l + u) / Rational(2);
  for (const auto& pair : t.pairs) {
    auto chk = thr_compatible(q, pair);
    if (!chk.compatible)
      throw Error(ErrorCode::SanityCheckFailed,
                  "threshold " + q.str() + " fails on " + pair.str() + " at arity " +
                      std::to_string(chk.violating_arity));
  }
  return q;
}

std::vector<Family> Classification::included() const {
  std::vector<Family> out;
  for (const auto& f : families)
    if (f.included) out.push_back(f.family);
  return out;
}

namespace {

std::vector<FamilyVerdict> family_verdicts(const Template& t) {
  std::vector<FamilyVerdict> out;
  auto add = [&](Family fam) {
    FamilyVerdict v;
    v.family = fam;
    v.witness = family_compatible(fam, t);
    v.included = !v.witness;
    out.push_back(v);
  };
  auto add_thr = [&](bool complemented) {
    FamilyVerdict v;
    ThresholdResult r = exists_threshold(complemented ? flip_codomain(t) : t);
    if (const Rational* q = std::get_if<Rational>(&r)) {
      v.family = Family::thr(*q, complemented);
      v.included = true;
    } else {
      v.family = Family{FamilyTag::Thr, complemented, {}};
      v.obstruction = std::get<ThresholdObstruction>(r);
    }
    out.push_back(v);
  };
  add(Family::constant(false));
  add(Family::constant(true));
  for (bool co : {false, true}) {
    add(Family::of(FamilyTag::Max, co));
    add(Family::of(FamilyTag::Min, co));
    add(Family::of(FamilyTag::AT, co));
    add(Family::of(FamilyTag::Xor, co));
    add_thr(co);
  }
  return out;
}

}  // namespace

Classification classify(const Template& t) {
  Classification c;
  c.homomorphisms = validate_template(t);
  c.families = family_verdicts(t);
  for (const auto& v : c.families)
    if (v.included) {
      c.verdict = Verdict::Tractable;
      c.witness = v.family;
      break;
    }
  if (c.witness) return c;
  c.verdict = Verdict::NPComplete;
  HardnessCertificate cert;
  cert.families = c.families;
  cert.closure = add_idempotents(t);
  cert.arel = derive_arel_witness(cert.closure);
  cert.crel = derive_crel_witness(cert.closure);
  try {
    cert.no_at = extract_no_at_witness(cert.closure);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateChain) throw;
    cert.no_at_note = e.what();
  }
  c.certificate = std::move(cert);
  return c;
}

namespace {

// Members of a family at the given arity, or none when the arity is not allowed.
std::vector<BooleanFunction> members_at(const Family& fam, int k) {
  std::vector<BooleanFunction> out;
  switch (fam.tag) {
    case FamilyTag::Const0: out.push_back(make_const(false, k)); break;
    case FamilyTag::Const1: out.push_back(make_const(true, k)); break;
    case FamilyTag::Max: out.push_back(make_max(k)); break;
    case FamilyTag::Min: out.push_back(make_min(k)); break;
    case FamilyTag::AT:
      if (k % 2) out.push_back(make_at(k));
      break;
    case FamilyTag::Xor:
      if (k % 2) out.push_back(make_xor(k));
      break;
    case FamilyTag::Thr:
      for (int j = 0; j < k; ++j)
        out.push_back(BooleanFunction::from_predicate(k, [j](VarSet u) { return std::popcount(u) > j; }));
      break;
  }
  if (fam.complemented)
    for (auto& f : out) f = f.negated();
  return out;
}

bool obstruction_valid(const Template& t, const ThresholdObstruction& o) {
  auto in_range = [&](size_t p) { return p < t.pairs.size(); };
  switch (o.kind) {
    case ObstructionKind::NonReflexive:
      return in_range(o.pair) && t.pairs[o.pair].strict.contains(o.a) &&
             !t.pairs[o.pair].relaxed.contains(o.a);
    case ObstructionKind::MiddleGap: {
      if (!in_range(o.pair)) return false;
      const auto& p = t.pairs[o.pair];
      return o.a < o.b && o.b < o.c && p.strict.contains(o.a) && p.strict.contains(o.c) &&
             !p.relaxed.contains(o.b) && !(o.a == 0 && o.c == p.arity());
    }
    case ObstructionKind::ConflictingSlopes: {
      if (!in_range(o.lower_pair) || !in_range(o.upper_pair)) return false;
      const auto& lp = t.pairs[o.lower_pair];
      const auto& up = t.pairs[o.upper_pair];
      bool lower_ok = o.b > o.a && lp.strict.contains(o.a) && !lp.relaxed.contains(o.b) &&
                      o.lower == Rational(o.a, o.b);
      bool upper_ok = o.d < o.c && o.m == up.arity() && up.strict.contains(o.c) &&
                      !up.relaxed.contains(o.d) && o.upper == Rational(o.c - o.d, o.m - o.d);
      return lower_ok && upper_ok && o.lower > o.upper;
    }
  }
  return false;
}

}  // namespace

ConsistencyReport hardness_consistency_check(const Template& t, const HardnessCertificate& cert,
                                             int max_arity) {
  ConsistencyReport rep;
  std::vector<BooleanFunction> pol;
  for (int k = 1; k <= max_arity; ++k) {
    auto fs = enumerate_polymorphisms(t, k);
    pol.insert(pol.end(), fs.begin(), fs.end());
  }
  rep.polymorphisms = pol.size();
  for (const auto& f : pol) {
    auto ones = max_disjoint_onesets(f);
    auto zeros = max_disjoint_zerosets(f);
    int anti = static_cast<int>(std::max(ones.size(), zeros.size()));
    if (ones.unbounded || zeros.unbounded) anti = std::max(anti, f.arity() + 1);
    rep.max_antichain = std::max(rep.max_antichain, anti);
    if (auto fx = smallest_fixing_set(f)) {
      int s = std::popcount(fx->set);
      if (rep.min_fixing_set < 0 || s < rep.min_fixing_set) rep.min_fixing_set = s;
    }
  }
  auto fail = [&](const std::string& why) {
    rep.consistent = false;
    rep.contradictions.push_back(why);
  };
  for (const auto& v : cert.families) {
    if (v.included) {
      fail(v.family.name() + " is marked included in a hardness certificate");
      continue;
    }
    if (v.obstruction) {
      if (!obstruction_valid(v.family.complemented ? flip_codomain(t) : t, *v.obstruction))
        fail(v.family.name() + " obstruction does not hold: " + v.obstruction->describe());
    }
    if (!v.witness) continue;
    const auto& w = *v.witness;
    if (w.pair >= t.pairs.size() || t.pairs[w.pair].relaxed.contains(w.weight)) {
      fail(v.family.name() + " witness does not violate its pair");
      continue;
    }
    const auto& pair = t.pairs[w.pair];
    if (v.family.tag != FamilyTag::Thr) {
      WeightSet orbit = family_orbit(v.family.tag, pair.strict);
      if (v.family.complemented) orbit = orbit.reflect();
      if (!orbit.contains(w.weight)) fail(v.family.name() + " witness weight is not reachable");
    }
    for (int k = 1; k <= max_arity; ++k)
      for (const auto& f : members_at(v.family, k)) {
        if (!std::binary_search(pol.begin(), pol.end(), f)) continue;
        if (output_weights(f, pair.strict).contains(w.weight))
          fail(v.family.name() + " member of arity " + std::to_string(k) +
               " is a polymorphism yet realizes the witness weight");
      }
  }
  return rep;
}

}  // namespace spcsp
