#include "spcsp/orbit.hpp"

#include "spcsp/error.hpp"

namespace spcsp {

Family Family::thr(const Rational& q, bool complemented) {
  if (q <= Rational(0) || q >= Rational(1))
    throw Error(ErrorCode::InvalidInput, "threshold q must lie strictly between 0 and 1");
  return {FamilyTag::Thr, complemented, q};
}

const char* family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Const0: return "Const0";
    case FamilyTag::Const1: return "Const1";
    case FamilyTag::Max: return "Max";
    case FamilyTag::Min: return "Min";
    case FamilyTag::AT: return "AT";
    case FamilyTag::Xor: return "Xor";
    case FamilyTag::Thr: return "Thr";
  }
  return "?";
}

std::string Family::name() const {
  std::string s = complemented ? "co-" : "";
  s += family_tag_name(tag);
  if (tag == FamilyTag::Thr && q.sign() != 0) s += "(" + q.str() + ")";
  return s;
}

WeightSet orbit_max(const WeightSet& i) {
  int n = i.bound();
  WeightSet out = WeightSet(n, i.mask() & 1u);
  int lo = i.min_at_least(1);
  if (lo >= 0) out = out.unite(WeightSet::range(n, lo, n));
  return out;
}

WeightSet orbit_min(const WeightSet& i) {
  int n = i.bound();
  WeightSet out(n, i.contains(n) ? (uint64_t{1} << n) : 0);
  int hi = i.max_at_most(n - 1);
  if (hi >= 0) out = out.unite(WeightSet::range(n, 0, hi));
  return out;
}

WeightSet orbit_at(const WeightSet& i) {
  int k = i.bound();
  if (i.size() >= 2) {
    if (i == WeightSet::of(k, {0, k})) return i;
    return WeightSet::full(k);
  }
  int l = i.min();
  if (l <= 0 || l >= k) return i;
  return WeightSet::range(k, 1, k - 1);
}

WeightSet xor3_achievable(int a, int b, int c, int n) {
  WeightSet out = WeightSet::none(n);
  for (int c111 = 0; c111 <= std::min({a, b, c}); ++c111)
    for (int c110 = 0; c110 + c111 <= std::min(a, b); ++c110)
      for (int c101 = 0; c101 + c110 + c111 <= a && c101 + c111 <= c; ++c101)
        for (int c011 = 0; c011 + c110 + c111 <= b && c011 + c101 + c111 <= c; ++c011) {
          int c100 = a - c111 - c110 - c101;
          int c010 = b - c111 - c110 - c011;
          int c001 = c - c111 - c101 - c011;
          int used = c111 + c110 + c101 + c011 + c100 + c010 + c001;
          if (used <= n) out.insert(c100 + c010 + c001 + c111);
        }
  return out;
}

WeightSet orbit_xor(const WeightSet& i) {
  int n = i.bound();
  WeightSet w = i;
  for (;;) {
    WeightSet next = w;
    auto el = w.elements();
    for (int a : el)
      for (int b : el)
        if (b >= a)
          for (int c : el)
            if (c >= b) next = next.unite(xor3_achievable(a, b, c, n));
    if (next == w) return w;
    w = next;
  }
}

WeightSet family_orbit(FamilyTag tag, const WeightSet& i) {
  switch (tag) {
    case FamilyTag::Const0: return WeightSet::of(i.bound(), {0});
    case FamilyTag::Const1: return WeightSet::of(i.bound(), {i.bound()});
    case FamilyTag::Max: return orbit_max(i);
    case FamilyTag::Min: return orbit_min(i);
    case FamilyTag::AT: return orbit_at(i);
    case FamilyTag::Xor: return orbit_xor(i);
    case FamilyTag::Thr: break;
  }
  throw Error(ErrorCode::InvalidInput, "threshold orbits depend on the arity sweep");
}

WeightSet thr_output_weights(const Rational& q, const WeightSet& i, int m) {
  int n = i.bound();
  WeightSet out = WeightSet::none(n);
  Rational mq = q * Rational(m);
  if (mq.is_integer() || i.empty()) return out;
  long h = mq.floor().get_si() + 1;  // column is high iff its sum >= h
  for (int t = 0; t <= n; ++t) {
    long budget = static_cast<long>(n - t) * (h - 1);
    int w1 = i.max_at_most(t);
    int w2 = i.min_at_least(t);
    long n2 = 0;
    if (w2 >= 0) n2 = (w2 == t) ? m : std::min<long>(m, budget / (w2 - t));
    long n1 = m - n2;
    if (n1 > 0 && w1 < 0) continue;
    long high = n1 * (n1 > 0 ? w1 : 0) + n2 * t;
    if (high >= static_cast<long>(t) * h) out.insert(t);
  }
  return out;
}

ThresholdCheck thr_compatible(const Rational& q, const RelationPair& pair,
                              std::optional<int> m_bound) {
  if (q <= Rational(0) || q >= Rational(1))
    throw Error(ErrorCode::InvalidInput, "threshold q must lie strictly between 0 and 1");
  long r = q.denominator().get_si();
  int n = pair.arity();
  long full_bound = 2 * r * n;
  int bound = m_bound ? *m_bound : static_cast<int>(full_bound);
  ThresholdCheck res;
  res.authoritative = bound >= full_bound;
  for (int m = 1; m <= bound; ++m) {
    if (m % r == 0) continue;
    WeightSet bad = thr_output_weights(q, pair.strict, m).intersect(pair.relaxed.complement());
    if (!bad.empty()) {
      res.compatible = false;
      res.violating_arity = m;
      res.violating_weight = bad.min();
      return res;
    }
  }
  return res;
}

WeightSet thr_singleton_interval(const Rational& q, int a, int n) {
  WeightSet out = WeightSet::none(n);
  Rational lo = Rational(n) - Rational(n - a) / (Rational(1) - q);
  Rational hi = Rational(a) / q;
  for (int t = 0; t <= n; ++t)
    if (Rational(t) > lo && Rational(t) < hi) out.insert(t);
  out.insert(a);
  return out;
}

std::optional<FamilyWitness> family_compatible(const Family& fam, const Template& t) {
  for (size_t p = 0; p < t.pairs.size(); ++p) {
    const auto& pair = t.pairs[p];
    int n = pair.arity();
    if (fam.tag == FamilyTag::Thr) {
      RelationPair target = pair;
      if (fam.complemented) target.relaxed = pair.relaxed.reflect();
      auto chk = thr_compatible(fam.q, target);
      if (!chk.compatible)
        return FamilyWitness{p, fam.complemented ? n - chk.violating_weight : chk.violating_weight};
      continue;
    }
    WeightSet out = family_orbit(fam.tag, pair.strict);
    if (fam.complemented) out = out.reflect();
    WeightSet bad = out.intersect(pair.relaxed.complement());
    if (!bad.empty()) return FamilyWitness{p, bad.min()};
  }
  return std::nullopt;
}

}  // namespace spcsp
