#include "spcsp/solver.hpp"

#include <algorithm>

#include "spcsp/classifier.hpp"
#include "spcsp/error.hpp"
#include "spcsp/relax.hpp"

namespace spcsp {

namespace {

Assignment complement(Assignment x) {
  for (auto& v : x) v = v ? 0 : 1;
  return x;
}

SolveResult complemented(SolveResult r) {
  if (r) *r = complement(std::move(*r));
  return r;
}

}  // namespace

SolveResult solve(const Instance& inst, const Template& t) {
  Classification c = classify(t);
  if (!c.tractable()) throw Error(ErrorCode::NotTractable, "template is NP-complete: " + t.str());
  return solve_with(inst, t, *c.witness);
}

namespace {

SolveResult dispatch(const Instance& inst, const Template& t, const Family& fam) {
  if (fam.complemented) {
    Family plain = fam;
    plain.complemented = false;
    return complemented(dispatch(inst, flip_codomain(t), plain));
  }
  switch (fam.tag) {
    case FamilyTag::Const0: return solve_const(inst, false);
    case FamilyTag::Const1: return solve_const(inst, true);
    case FamilyTag::Max: return solve_max(inst, t);
    case FamilyTag::Min: return solve_min(inst, t);
    case FamilyTag::AT: return solve_at(inst, t);
    case FamilyTag::Xor: return solve_xor(inst, t);
    case FamilyTag::Thr: return solve_thr(inst, t, fam.q);
  }
  throw Error(ErrorCode::NotTractable, "unknown family");
}

}  // namespace

// Outputs failing the relaxed side are reported as NoInstance.
SolveResult solve_with(const Instance& inst, const Template& t, const Family& fam) {
  validate_instance(inst, t);
  SolveResult x = dispatch(inst, t, fam);
  if (x && !check_assignment(inst, t, *x, Side::B)) return std::nullopt;
  return x;
}

SolveResult solve_const(const Instance& inst, bool value) {
  return Assignment(inst.variables, value ? 1 : 0);
}

SolveResult solve_max(const Instance& inst, const Template& t) {
  validate_instance(inst, t);
  std::vector<uint8_t> zero(inst.variables, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : inst.constraints) {
      const WeightSet& i = t.pairs[c.pair].strict;
      int u = 0;
      for (int v : c.scope) u += zero[v] ? 0 : 1;
      int top = i.max_at_most(u);
      if (top < 0) return std::nullopt;
      if (top == 0 && u > 0) {
        for (int v : c.scope) zero[v] = 1;
        changed = true;
      }
    }
  }
  return complement(zero);
}

SolveResult solve_min(const Instance& inst, const Template& t) {
  return complemented(solve_max(inst, flip_template(t)));
}

std::vector<ParityEquation> xor_system(const Instance& inst, const Template& t) {
  validate_instance(inst, t);
  std::vector<ParityEquation> out;
  for (const auto& c : inst.constraints) {
    const auto& pair = t.pairs[c.pair];
    int n = pair.arity();
    auto levels = pair.strict.elements();
    auto prefix = [n](int w) {
      linalg::BitRow r(n);
      for (int i = 0; i < w; ++i) r.set(i, true);
      return r;
    };
    linalg::BitRow base = prefix(levels.front());
    std::vector<linalg::BitRow> dirs;
    for (int w : levels) {
      linalg::BitRow d = prefix(w);
      d ^= base;
      if (d.any()) dirs.push_back(d);
    }
    bool middle = std::any_of(levels.begin(), levels.end(), [n](int w) { return w > 0 && w < n; });
    if (middle)
      for (int i = 0; i + 1 < n; ++i) {
        linalg::BitRow d(n);
        d.set(i, true);
        d.set(i + 1, true);
        dirs.push_back(d);
      }
    for (const auto& eq : linalg::affine_equations(base, dirs)) {
      std::vector<uint8_t> in(inst.variables, 0);
      for (int p = 0; p < n; ++p)
        if (eq.lhs.get(p)) in[c.scope[p]] ^= 1;
      ParityEquation pe;
      for (int v = 0; v < inst.variables; ++v)
        if (in[v]) pe.support.push_back(v);
      pe.rhs = eq.rhs;
      out.push_back(std::move(pe));
    }
  }
  return out;
}

SolveResult solve_xor(const Instance& inst, const Template& t) {
  auto system = xor_system(inst, t);
  std::vector<linalg::Gf2Equation> eqs;
  for (const auto& pe : system) {
    linalg::BitRow r(std::max(inst.variables, 1));
    for (int v : pe.support) r.set(v, true);
    eqs.push_back({r, pe.rhs});
  }
  auto x = linalg::solve_gf2(std::move(eqs), inst.variables);
  if (!x) return std::nullopt;
  return Assignment(x->begin(), x->end());
}

LatticeGenerators lattice_model(const RelationPair& pair) {
  int n = pair.arity();
  auto levels = pair.strict.elements();
  if (levels.empty()) throw Error(ErrorCode::EmptyStrictRelation, "empty strict relation");
  auto prefix = [n](int w) {
    std::vector<int> r(n, 0);
    for (int i = 0; i < w; ++i) r[i] = 1;
    return r;
  };
  LatticeGenerators g;
  g.base = prefix(levels.front());
  bool middle = std::any_of(levels.begin(), levels.end(), [n](int w) { return w > 0 && w < n; });
  if (middle)
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> d(n, 0);
      d[i] = 1;
      d[i + 1] = -1;
      g.generators.push_back(d);
    }
  for (size_t l = 1; l < levels.size(); ++l) {
    std::vector<int> d = prefix(levels[l]);
    for (int i = 0; i < n; ++i) d[i] -= g.base[i];
    g.generators.push_back(d);
  }
  return g;
}

std::optional<LatticeSolution> solve_lattice(const Instance& inst, const Template& t) {
  validate_instance(inst, t);
  std::vector<LatticeGenerators> models;
  int columns = inst.variables;
  std::vector<int> offset;
  for (const auto& c : inst.constraints) {
    models.push_back(lattice_model(t.pairs[c.pair]));
    offset.push_back(columns);
    columns += static_cast<int>(models.back().generators.size());
  }
  linalg::IntMatrix a;
  std::vector<mpz_class> b;
  for (size_t ci = 0; ci < inst.constraints.size(); ++ci) {
    const auto& c = inst.constraints[ci];
    const auto& m = models[ci];
    for (size_t p = 0; p < c.scope.size(); ++p) {
      std::vector<mpz_class> row(columns, 0);
      row[c.scope[p]] += 1;
      for (size_t g = 0; g < m.generators.size(); ++g) row[offset[ci] + g] -= m.generators[g][p];
      a.push_back(std::move(row));
      b.push_back(m.base[p]);
    }
  }
  auto y = linalg::solve_integer(a, b, columns);
  if (!y) return std::nullopt;
  LatticeSolution sol;
  sol.point.assign(y->begin(), y->begin() + inst.variables);
  for (size_t ci = 0; ci < inst.constraints.size(); ++ci) {
    auto first = y->begin() + offset[ci];
    sol.coefficients.emplace_back(first, first + models[ci].generators.size());
  }
  return sol;
}

SolveResult solve_at(const Instance& inst, const Template& t) {
  auto sol = solve_lattice(inst, t);
  if (!sol) return std::nullopt;
  Assignment x(inst.variables, 0);
  for (int v = 0; v < inst.variables; ++v) x[v] = sol->point[v] >= 1 ? 1 : 0;
  return x;
}

namespace {

struct SideFix {
  int var;
  bool high;
};

class ThresholdLp {
 public:
  ThresholdLp(const Instance& inst, const Template& t, const Rational& q)
      : inst_(inst), t_(t), q_(q.raw()) {
    used_.assign(inst.variables, -1);
    for (const auto& c : inst.constraints)
      for (int v : c.scope)
        if (used_[v] < 0) used_[v] = columns_++;
    mpq_class one(1);
    delta_ = (q_ < one - q_ ? q_ : mpq_class(one - q_)) / 2;
    for (const auto& c : inst.constraints) {
      const auto& pair = t_.pairs[c.pair];
      int n = pair.arity();
      Layout l;
      for (int w : pair.strict.elements()) {
        l.levels.push_back(w);
        l.mass.push_back(columns_++);
        std::vector<int> z, s;
        if (w > 0 && w < n)
          for (int p = 0; p < n; ++p) {
            z.push_back(columns_++);
            s.push_back(columns_++);
          }
        l.split.push_back(z);
        l.slack.push_back(s);
      }
      layouts_.push_back(l);
    }
  }

  std::optional<std::vector<mpq_class>> solve(const std::vector<SideFix>& fixes) {
    ++solves_;
    int columns = columns_ + static_cast<int>(fixes.size());
    linalg::RatMatrix a;
    std::vector<mpq_class> b;
    auto row = [&] { return std::vector<mpq_class>(columns, 0); };
    for (size_t ci = 0; ci < inst_.constraints.size(); ++ci) {
      const auto& c = inst_.constraints[ci];
      const auto& l = layouts_[ci];
      int n = t_.pairs[c.pair].arity();
      auto total = row();
      for (int m : l.mass) total[m] = 1;
      a.push_back(total);
      b.push_back(1);
      for (size_t k = 0; k < l.levels.size(); ++k) {
        if (l.split[k].empty()) continue;
        auto sum = row();
        for (int z : l.split[k]) sum[z] = 1;
        sum[l.mass[k]] = -l.levels[k];
        a.push_back(sum);
        b.push_back(0);
        for (int p = 0; p < n; ++p) {
          auto cap = row();
          cap[l.split[k][p]] = 1;
          cap[l.slack[k][p]] = 1;
          cap[l.mass[k]] = -1;
          a.push_back(cap);
          b.push_back(0);
        }
      }
      for (int p = 0; p < n; ++p) {
        auto link = row();
        link[used_[c.scope[p]]] += 1;
        for (size_t k = 0; k < l.levels.size(); ++k) {
          if (!l.split[k].empty()) link[l.split[k][p]] -= 1;
          else if (l.levels[k] == n) link[l.mass[k]] -= 1;
        }
        a.push_back(link);
        b.push_back(0);
      }
    }
    for (size_t f = 0; f < fixes.size(); ++f) {
      auto r = row();
      r[used_[fixes[f].var]] = 1;
      r[columns_ + f] = fixes[f].high ? -1 : 1;
      a.push_back(r);
      b.push_back(fixes[f].high ? mpq_class(q_ + delta_) : mpq_class(q_ - delta_));
    }
    return linalg::feasible_point(a, b, columns);
  }

  std::optional<std::vector<mpq_class>> search(std::vector<SideFix>& fixes) {
    auto point = solve(fixes);
    if (!point) return std::nullopt;
    for (int v = 0; v < inst_.variables; ++v) {
      if (used_[v] < 0 || (*point)[used_[v]] != q_) continue;
      for (bool high : {false, true}) {
        fixes.push_back({v, high});
        auto r = search(fixes);
        fixes.pop_back();
        if (r) return r;
      }
      return std::nullopt;
    }
    return point;
  }

  LpSolution extract(const std::vector<mpq_class>& point) const {
    LpSolution s;
    for (int v = 0; v < inst_.variables; ++v)
      s.x.push_back(used_[v] < 0 ? Rational(0) : Rational(point[used_[v]]));
    for (const auto& l : layouts_) {
      std::vector<Rational> mass;
      std::vector<std::vector<Rational>> split;
      for (size_t k = 0; k < l.levels.size(); ++k) {
        mass.push_back(Rational(point[l.mass[k]]));
        std::vector<Rational> z;
        for (int col : l.split[k]) z.push_back(Rational(point[col]));
        split.push_back(z);
      }
      s.mass.push_back(mass);
      s.split.push_back(split);
    }
    s.lp_solves = solves_;
    return s;
  }

 private:
  struct Layout {
    std::vector<int> levels, mass;
    std::vector<std::vector<int>> split, slack;
  };

  const Instance& inst_;
  const Template& t_;
  mpq_class q_, delta_;
  std::vector<int> used_;
  int columns_ = 0;
  std::vector<Layout> layouts_;
  int solves_ = 0;
};

}  // namespace

std::optional<LpSolution> solve_threshold_lp(const Instance& inst, const Template& t, const Rational& q) {
  validate_instance(inst, t);
  if (q <= Rational(0) || q >= Rational(1))
    throw Error(ErrorCode::InvalidInput, "threshold q must lie strictly between 0 and 1");
  ThresholdLp lp(inst, t, q);
  std::vector<SideFix> fixes;
  auto point = lp.search(fixes);
  if (!point) return std::nullopt;
  return lp.extract(*point);
}

SolveResult solve_thr(const Instance& inst, const Template& t, const Rational& q) {
  auto lp = solve_threshold_lp(inst, t, q);
  if (!lp) return std::nullopt;
  Assignment x(inst.variables, 0);
  for (int v = 0; v < inst.variables; ++v) x[v] = lp->x[v] > q ? 1 : 0;
  return x;
}

SolveResult brute_force_solve(const Instance& inst, const Template& t, Side side) {
  validate_instance(inst, t);
  if (inst.variables > 25) throw Error(ErrorCode::TooLarge, "brute force is limited to 25 variables");
  int nc = static_cast<int>(inst.constraints.size());
  std::vector<std::vector<std::pair<int, int>>> occurs(inst.variables);  // (constraint, multiplicity)
  for (int c = 0; c < nc; ++c) {
    std::vector<int> count(inst.variables, 0);
    for (int v : inst.constraints[c].scope) ++count[v];
    for (int v = 0; v < inst.variables; ++v)
      if (count[v]) occurs[v].push_back({c, count[v]});
  }
  std::vector<int> ones(nc, 0), open(nc, 0);
  for (int c = 0; c < nc; ++c) open[c] = static_cast<int>(inst.constraints[c].scope.size());
  auto allowed = [&](int c) -> const WeightSet& {
    const auto& p = t.pairs[inst.constraints[c].pair];
    return side == Side::A ? p.strict : p.relaxed;
  };
  auto ok = [&](int c) {
    int w = allowed(c).min_at_least(ones[c]);
    return w >= 0 && w <= ones[c] + open[c];
  };
  for (int c = 0; c < nc; ++c)
    if (!ok(c)) return std::nullopt;
  Assignment x(inst.variables, 0);
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == inst.variables) return true;
    for (int val = 0; val < 2; ++val) {
      x[v] = static_cast<uint8_t>(val);
      bool good = true;
      for (auto [c, mult] : occurs[v]) {
        open[c] -= mult;
        ones[c] += val * mult;
      }
      for (auto [c, mult] : occurs[v]) good = good && ok(c);
      if (good && self(self, v + 1)) return true;
      for (auto [c, mult] : occurs[v]) {
        open[c] += mult;
        ones[c] -= val * mult;
      }
    }
    x[v] = 0;
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return x;
}

}  // namespace spcsp
