#include "spcsp/analysis.hpp"

#include <algorithm>
#include <bit>

#include "spcsp/error.hpp"

namespace spcsp {

namespace {

void require_arity(int k, int lo = 1) {
  if (k < lo || k > kMaxFunctionArity)
    throw Error(ErrorCode::InvalidArity, "arity " + std::to_string(k) + " not supported");
}

bool in_range(VarSet u, int k) { return (u & ~full_varset(k)) == 0; }

std::vector<VarSet> sorted_sets(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : lex_less(a, b);
  });
  return sets;
}

std::vector<VarSet> collect(int k, const std::vector<bool>& pred) {
  std::vector<VarSet> out;
  for (VarSet u = 0; u < (VarSet{1} << k); ++u)
    if (pred[u]) out.push_back(u);
  return sorted_sets(std::move(out));
}

std::vector<bool> minimal_of(int k, const std::vector<bool>& pred) {
  size_t size = size_t{1} << k;
  std::vector<bool> below(size, false), out(size, false);
  for (VarSet u = 0; u < size; ++u) {
    for (VarSet m = u; m; m &= m - 1) {
      VarSet v = u & ~(m & -m);
      if (pred[v] || below[v]) {
        below[u] = true;
        break;
      }
    }
    out[u] = pred[u] && !below[u];
  }
  return out;
}

std::vector<bool> oneset_table(const BooleanFunction& f) {
  std::vector<bool> t(f.table_size());
  for (VarSet u = 0; u < f.table_size(); ++u) t[u] = f(u);
  return t;
}

std::vector<bool> zeroset_table(const BooleanFunction& f) {
  VarSet full = full_varset(f.arity());
  std::vector<bool> t(f.table_size());
  for (VarSet u = 0; u < f.table_size(); ++u) t[u] = !f(full & ~u);
  return t;
}

// Entry u true iff pred holds on every superset of u.
std::vector<bool> upward_closure(int k, const std::vector<bool>& pred) {
  size_t size = size_t{1} << k;
  std::vector<bool> out(size, false);
  for (VarSet u = static_cast<VarSet>(size); u-- > 0;) {
    bool ok = pred[u];
    for (int i = 0; i < k && ok; ++i)
      if (!(u >> i & 1u)) ok = out[u | (VarSet{1} << i)];
    out[u] = ok;
  }
  return out;
}

std::optional<VarSet> smallest_in(int k, const std::vector<bool>& flags) {
  std::optional<VarSet> best;
  for (VarSet u = 0; u < (VarSet{1} << k); ++u) {
    if (!flags[u]) continue;
    if (!best || std::popcount(u) < std::popcount(*best) ||
        (std::popcount(u) == std::popcount(*best) && lex_less(u, *best)))
      best = u;
  }
  return best;
}

}  // namespace

BooleanFunction make_max(int k) {
  require_arity(k);
  return BooleanFunction::from_predicate(k, [](VarSet u) { return u != 0; });
}

BooleanFunction make_min(int k) {
  require_arity(k);
  VarSet full = full_varset(k);
  return BooleanFunction::from_predicate(k, [full](VarSet u) { return u == full; });
}

BooleanFunction make_xor(int k) {
  require_arity(k);
  if (k % 2 == 0) throw Error(ErrorCode::InvalidArity, "xor needs odd arity");
  return BooleanFunction::from_predicate(k, [](VarSet u) { return std::popcount(u) % 2 == 1; });
}

BooleanFunction make_at(int arity) {
  require_arity(arity);
  if (arity % 2 == 0) throw Error(ErrorCode::InvalidArity, "alternating threshold needs odd arity");
  int k = arity / 2;
  VarSet first = full_varset(k);
  return BooleanFunction::from_predicate(arity, [=](VarSet u) {
    return std::popcount(u & first) < std::popcount(u >> k);
  });
}

BooleanFunction make_thr(const Rational& q, int k) {
  require_arity(k);
  if (q <= Rational(0) || q >= Rational(1))
    throw Error(ErrorCode::InvalidInput, "threshold q must lie strictly between 0 and 1");
  Rational kq = q * Rational(k);
  if (kq.is_integer())
    throw Error(ErrorCode::InvalidArity, "threshold " + q.str() + " undefined at arity " +
                                             std::to_string(k));
  long floor_kq = kq.floor().get_si();
  return BooleanFunction::from_predicate(k, [=](VarSet u) { return std::popcount(u) > floor_kq; });
}

BooleanFunction make_almost_negation(int m) {
  require_arity(m);
  VarSet full = full_varset(m);
  VarSet last = VarSet{1} << (m - 1);
  return BooleanFunction::from_predicate(m, [=](VarSet u) {
    if (u == full) return true;
    if (u == 0) return false;
    return (u & last) == 0;
  });
}

BooleanFunction make_const(bool value, int k) {
  require_arity(k);
  return BooleanFunction::from_predicate(k, [value](VarSet) { return value; });
}

BooleanFunction make_projection(int k, int i) {
  require_arity(k);
  if (i < 0 || i >= k) throw Error(ErrorCode::InvalidInput, "projection index out of range");
  return BooleanFunction::from_predicate(k, [i](VarSet u) { return (u >> i) & 1u; });
}

BooleanFunction minor(const BooleanFunction& f, const MinorMap& pi) {
  if (static_cast<int>(pi.map.size()) != f.arity())
    throw Error(ErrorCode::ArityMismatch, "minor map length differs from the function arity");
  require_arity(pi.target_arity);
  for (int v : pi.map)
    if (v < 0 || v >= pi.target_arity)
      throw Error(ErrorCode::InvalidInput, "minor map value out of range");
  return BooleanFunction::from_predicate(pi.target_arity, [&](VarSet v) {
    VarSet u = 0;
    for (size_t i = 0; i < pi.map.size(); ++i)
      if ((v >> pi.map[i]) & 1u) u |= VarSet{1} << i;
    return f(u);
  });
}

MinorMap compose(const MinorMap& pi, const MinorMap& sigma) {
  if (static_cast<int>(sigma.map.size()) != pi.target_arity)
    throw Error(ErrorCode::ArityMismatch, "minor maps do not compose");
  MinorMap out{sigma.target_arity, {}};
  for (int v : pi.map) out.map.push_back(sigma.map[v]);
  return out;
}

BooleanFunction restrict_to(const BooleanFunction& f, VarSet u) {
  if (!in_range(u, f.arity())) throw Error(ErrorCode::InvalidInput, "set not within arguments");
  std::vector<int> lift = members(u);
  if (lift.empty()) throw Error(ErrorCode::InvalidArity, "restriction to the empty set");
  return BooleanFunction::from_predicate(static_cast<int>(lift.size()), [&](VarSet v) {
    VarSet w = 0;
    for (size_t j = 0; j < lift.size(); ++j)
      if ((v >> j) & 1u) w |= VarSet{1} << lift[j];
    return f(w);
  });
}

std::vector<int> members(VarSet u) {
  std::vector<int> out;
  for (; u; u &= u - 1) out.push_back(std::countr_zero(u));
  return out;
}

bool lex_less(VarSet a, VarSet b) {
  while (a && b) {
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

bool is_oneset(const BooleanFunction& f, VarSet u) { return f(u); }
bool is_zeroset(const BooleanFunction& f, VarSet u) {
  return !f(full_varset(f.arity()) & ~u);
}

std::vector<VarSet> onesets(const BooleanFunction& f) { return collect(f.arity(), oneset_table(f)); }
std::vector<VarSet> zerosets(const BooleanFunction& f) { return collect(f.arity(), zeroset_table(f)); }
std::vector<VarSet> minimal_onesets(const BooleanFunction& f) {
  return collect(f.arity(), minimal_of(f.arity(), oneset_table(f)));
}
std::vector<VarSet> minimal_zerosets(const BooleanFunction& f) {
  return collect(f.arity(), minimal_of(f.arity(), zeroset_table(f)));
}

std::vector<bool> onefix_table(const BooleanFunction& f) {
  return upward_closure(f.arity(), oneset_table(f));
}
std::vector<bool> zerofix_table(const BooleanFunction& f) {
  return upward_closure(f.arity(), zeroset_table(f));
}

bool is_onefix(const BooleanFunction& f, VarSet u) {
  VarSet free = full_varset(f.arity()) & ~u;
  for (VarSet s = free;; s = (s - 1) & free) {
    if (!f(u | s)) return false;
    if (s == 0) return true;
  }
}

bool is_zerofix(const BooleanFunction& f, VarSet u) {
  VarSet free = full_varset(f.arity()) & ~u;
  for (VarSet s = free;; s = (s - 1) & free) {
    if (f(s)) return false;
    if (s == 0) return true;
  }
}

std::optional<VarSet> smallest_onefset(const BooleanFunction& f) {
  return smallest_in(f.arity(), onefix_table(f));
}

std::optional<VarSet> smallest_zerofset(const BooleanFunction& f) {
  return smallest_in(f.arity(), zerofix_table(f));
}

std::optional<FixingSet> smallest_fixing_set(const BooleanFunction& f) {
  auto one = smallest_onefset(f);
  auto zero = smallest_zerofset(f);
  if (one && (!zero || std::popcount(*one) <= std::popcount(*zero)))
    return FixingSet{FixKind::One, *one};
  if (zero) return FixingSet{FixKind::Zero, *zero};
  return std::nullopt;
}

namespace {

struct PackingSearch {
  std::vector<VarSet> cands;
  std::vector<std::vector<int>> by_element;
  int min_size = 1;
  std::vector<VarSet> best, current;

  void run(VarSet avail) {
    VarSet coverable = 0;
    for (VarSet s : cands)
      if ((s & ~avail) == 0) coverable |= s;
    if (!coverable) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + std::popcount(coverable) / min_size <= best.size()) return;
    int e = std::countr_zero(coverable);
    for (int idx : by_element[e]) {
      VarSet s = cands[idx];
      if (s & ~avail) continue;
      current.push_back(s);
      run(avail & ~s);
      current.pop_back();
    }
    run(avail & ~(VarSet{1} << e));
  }
};

Packing packing_from(const std::vector<VarSet>& minimal) {
  Packing p;
  if (!minimal.empty() && minimal.front() == 0) {
    p.unbounded = true;
    p.sets.push_back(0);
    return p;
  }
  p.sets = max_set_packing(minimal);
  return p;
}

}  // namespace

std::vector<VarSet> max_set_packing(std::vector<VarSet> candidates) {
  candidates.erase(std::remove(candidates.begin(), candidates.end(), VarSet{0}), candidates.end());
  candidates = sorted_sets(std::move(candidates));
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) return {};
  PackingSearch s;
  s.cands = candidates;
  s.by_element.resize(32);
  s.min_size = std::popcount(candidates.front());
  VarSet all = 0;
  for (size_t i = 0; i < candidates.size(); ++i) {
    all |= candidates[i];
    for (VarSet m = candidates[i]; m; m &= m - 1)
      s.by_element[std::countr_zero(m)].push_back(static_cast<int>(i));
  }
  VarSet used = 0;
  for (VarSet c : candidates)
    if (!(c & used)) {
      s.best.push_back(c);
      used |= c;
    }
  s.run(all);
  return sorted_sets(s.best);
}

Packing max_disjoint_onesets(const BooleanFunction& f) {
  return packing_from(minimal_onesets(f));
}

Packing max_disjoint_zerosets(const BooleanFunction& f) {
  return packing_from(minimal_zerosets(f));
}

int WitnessMatrix::output_weight() const {
  int w = 0;
  for (auto b : output) w += b;
  return w;
}

std::optional<PolymorphismFailure> polymorphism_failure(const BooleanFunction& f, const Template& t) {
  for (size_t p = 0; p < t.pairs.size(); ++p)
    if (auto w = find_witness(f, t.pairs[p])) return PolymorphismFailure{p, *w};
  return std::nullopt;
}

std::vector<std::vector<int>> symmetry_classes(const BooleanFunction& f) {
  int k = f.arity();
  auto swappable = [&](int i, int j) {
    VarSet bi = VarSet{1} << i, bj = VarSet{1} << j;
    for (VarSet u = 0; u < f.table_size(); ++u)
      if ((u & bi) && !(u & bj) && f(u) != f((u & ~bi) | bj)) return false;
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < k; ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (swappable(c.front(), i)) {
        c.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

bool is_star_compatible(const BooleanFunction& f, const RelationPair& pair, StarSide side) {
  int n = pair.arity();
  if (pair.strict.size() != 1) throw Error(ErrorCode::ShapeMismatch, "star shape needs a singleton I");
  int a = pair.strict.min();
  WeightSet expected = side == StarSide::One ? WeightSet::range(n, 0, n - 1)
                                             : WeightSet::range(n, 1, n);
  if (pair.relaxed != expected || a <= 0 || a >= n)
    throw Error(ErrorCode::ShapeMismatch, "pair " + pair.str() + " does not have the star shape");
  int k = f.arity();
  VarSet full = full_varset(k);
  std::vector<bool> minimal = side == StarSide::One ? minimal_of(k, oneset_table(f))
                                                    : minimal_of(k, zeroset_table(f));
  // Columns that keep the output constant, and whether they are acceptable.
  std::vector<VarSet> cols;
  std::vector<bool> good;
  for (VarSet u = 0; u <= full; ++u) {
    bool out = f(u);
    if (side == StarSide::One && out) {
      cols.push_back(u);
      good.push_back(minimal[u]);
    } else if (side == StarSide::Zero && !out) {
      cols.push_back(u);
      good.push_back(minimal[full & ~u]);
    }
  }
  std::vector<int> sums(k, 0);
  // Search for n columns (nondecreasing index) with row sums a and a bad column.
  auto dfs = [&](auto&& self, size_t from, int placed, bool bad) -> bool {
    int left = n - placed;
    for (int r = 0; r < k; ++r)
      if (sums[r] > a || sums[r] + left < a) return false;
    if (left == 0) return bad;
    for (size_t c = from; c < cols.size(); ++c) {
      for (VarSet m = cols[c]; m; m &= m - 1) ++sums[std::countr_zero(m)];
      bool found = self(self, c, placed + 1, bad || !good[c]);
      for (VarSet m = cols[c]; m; m &= m - 1) --sums[std::countr_zero(m)];
      if (found) return true;
    }
    return false;
  };
  return !dfs(dfs, 0, 0, false);
}

bool is_e_flippable(const BooleanFunction& f, int e, FlipKind kind) {
  int k = f.arity();
  for (VarSet u = 0; u < f.table_size(); ++u) {
    int s = std::popcount(u);
    if (!(s > e && s < k - e)) continue;
    bool v = f(u);
    bool checked = (v && kind != FlipKind::Zero) || (!v && kind != FlipKind::One);
    if (!checked) continue;
    for (int i = 0; i < k; ++i)
      if (f(u ^ (VarSet{1} << i)) == v) return false;
  }
  return true;
}

VariableDistribution variable_distribution(const BooleanFunction& f, int size_bound) {
  std::vector<bool> fix = onefix_table(f);
  std::vector<VarSet> cands;
  for (VarSet u = 1; u < f.table_size(); ++u)
    if (fix[u] && std::popcount(u) < size_bound) cands.push_back(u);
  if (cands.empty())
    throw Error(ErrorCode::NoSmallFixingSet,
                "no nonempty onefset smaller than " + std::to_string(size_bound));
  VariableDistribution d;
  for (VarSet u : sorted_sets(cands))
    if (!(u & d.support)) d.support |= u;
  Rational p(1, std::popcount(d.support));
  d.probability.assign(f.arity(), Rational(0));
  for (int i : members(d.support)) d.probability[i] = p;
  return d;
}

}  // namespace spcsp
