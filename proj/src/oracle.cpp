#include "spcsp/oracle.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "spcsp/analysis.hpp"
#include "spcsp/classifier.hpp"
#include "spcsp/error.hpp"
#include "spcsp/generate.hpp"
#include "spcsp/relax.hpp"
#include "spcsp/solver.hpp"

namespace spcsp {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  size_t cases = 0;
  size_t failures = 0;
  std::vector<std::string> samples;
  double worst = 0;

  void check(bool ok, const std::function<std::string()>& describe, size_t limit = 5) {
    ++cases;
    if (ok) return;
    ++failures;
    if (samples.size() < limit) samples.push_back(describe());
  }
};

// Runs body(i) for i in [0, n) on up to `jobs` threads and merges in index order.
SuiteResult gather(const std::string& name, size_t n, const SuiteOptions& opts,
                   const std::function<Outcome(size_t)>& body) {
  auto t0 = Clock::now();
  std::vector<Outcome> parts(n);
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (size_t i; (i = next++) < n;) {
      try {
        parts[i] = body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  SuiteResult r;
  r.name = name;
  for (auto& p : parts) {
    r.cases += p.cases;
    r.failures += p.failures;
    r.worst_case_seconds = std::max(r.worst_case_seconds, p.worst);
    for (auto& s : p.samples)
      if (static_cast<int>(r.samples.size()) < opts.max_samples) r.samples.push_back(std::move(s));
  }
  r.seconds = since(t0);
  return r;
}

struct PairShape {
  int n;
  WeightSet strict;
};

// Every nonempty I over {0..n} for n in [lo, hi].
std::vector<PairShape> strict_sides(int lo, int hi) {
  std::vector<PairShape> out;
  for (int n = lo; n <= hi; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m) out.push_back({n, WeightSet(n, m)});
  return out;
}

WeightSet union_of_outputs(const std::vector<BooleanFunction>& fs, const WeightSet& i) {
  WeightSet u = WeightSet::none(i.bound());
  const WeightSet full = WeightSet::full(i.bound());
  for (const auto& f : fs) {
    if (u == full) break;
    u = u.unite(output_weights(f, i));
  }
  return u;
}

std::vector<BooleanFunction> family_members(FamilyTag tag, int max_arity) {
  std::vector<BooleanFunction> out;
  for (int k = 1; k <= max_arity; ++k) switch (tag) {
      case FamilyTag::Max: out.push_back(make_max(k)); break;
      case FamilyTag::Min: out.push_back(make_min(k)); break;
      case FamilyTag::Xor:
        if (k % 2) out.push_back(make_xor(k));
        break;
      case FamilyTag::AT:
        if (k % 2) out.push_back(make_at(k));
        break;
      default: break;
    }
  return out;
}

std::vector<BooleanFunction> at_members(std::initializer_list<int> arities) {
  std::vector<BooleanFunction> out;
  for (int m : arities) out.push_back(make_at(m));
  return out;
}

Template example_template() {
  return Template({RelationPair::of({0}, {0}, 1), RelationPair::of({1}, {1}, 1),
                   RelationPair::of({1}, {1, 2}, 3), RelationPair::of({1}, {1, 2}, 4)});
}

SuiteResult classify_goldens(const SuiteOptions& opts) {
  return gather("classify-goldens", 1, opts, [](size_t) {
    Outcome o;
    {
      auto t0 = Clock::now();
      Template t({RelationPair::of({1}, {1, 2}, 3)});
      Classification c = classify(t);
      double s = since(t0);
      o.worst = std::max(o.worst, s);
      bool at = false;
      for (const auto& f : c.included()) at = at || (f.tag == FamilyTag::AT && !f.complemented);
      o.check(c.tractable() && at && s < 1.0, [&] { return "one-in-three vs NAE: " + t.str(); });
    }
    {
      auto t0 = Clock::now();
      Template t = example_template();
      Classification c = classify(t);
      double s = since(t0);
      o.worst = std::max(o.worst, s);
      o.check(!c.tractable() && c.certificate && s < 1.0, [&] { return "example template: " + t.str(); });
    }
    return o;
  });
}

SuiteResult orbit_equivalence(const std::string& name, int max_arity, const SuiteOptions& opts) {
  static const FamilyTag kTags[] = {FamilyTag::Max, FamilyTag::Min, FamilyTag::Xor, FamilyTag::AT};
  auto sides = strict_sides(1, 5);
  return gather(name, sides.size() * 4, opts, [&](size_t idx) {
    Outcome o;
    const auto& s = sides[idx / 4];
    FamilyTag tag = kTags[idx % 4];
    WeightSet reached = union_of_outputs(family_members(tag, max_arity), s.strict);
    for (uint64_t jm = 0; jm < (uint64_t{1} << (s.n + 1)); ++jm) {
      RelationPair p(s.strict, WeightSet(s.n, jm));
      bool claimed = !family_compatible(Family::of(tag), Template({p})).has_value();
      bool brute = reached.subset_of(p.relaxed);
      o.check(claimed == brute, [&] {
        return std::string(family_tag_name(tag)) + " " + p.str() + ": orbit " +
               family_orbit(tag, s.strict).str() + ", brute force " + reached.str();
      });
    }
    return o;
  });
}

std::vector<Rational> small_thresholds(int max_den) {
  std::vector<Rational> out;
  for (int r = 2; r <= max_den; ++r)
    for (int p = 1; p < r; ++p)
      if (std::gcd(p, r) == 1) out.push_back(Rational(p, r));
  return out;
}

SuiteResult threshold_characterization(const std::string& name, int max_arity, const SuiteOptions& opts) {
  auto sides = strict_sides(1, 5);
  auto qs = small_thresholds(6);
  return gather(name, sides.size(), opts, [&](size_t idx) {
    Outcome o;
    const auto& s = sides[idx];
    std::vector<WeightSet> reached;
    for (const auto& q : qs) {
      WeightSet u = WeightSet::none(s.n);
      for (int m = 1; m <= max_arity && u != WeightSet::full(s.n); ++m) {
        if ((q * Rational(m)).is_integer()) continue;
        u = u.unite(m <= kMaxFunctionArity ? output_weights(make_thr(q, m), s.strict)
                                           : thr_output_weights(q, s.strict, m));
      }
      reached.push_back(u);
    }
    for (uint64_t jm = 0; jm < (uint64_t{1} << (s.n + 1)); ++jm) {
      RelationPair p(s.strict, WeightSet(s.n, jm));
      bool brute = false;
      for (const auto& u : reached) brute = brute || u.subset_of(p.relaxed);
      std::string detail;
      bool claimed = false;
      try {
        auto r = exists_threshold(Template({p}));
        claimed = std::holds_alternative<Rational>(r);
        detail = claimed ? "q=" + std::get<Rational>(r).str() : std::get<ThresholdObstruction>(r).describe();
      } catch (const Error& e) {
        detail = e.what();
        claimed = !brute;
      }
      o.check(claimed == brute, [&] {
        return p.str() + ": " + detail + ", brute force " + (brute ? "found" : "found none");
      });
    }
    return o;
  });
}

SuiteResult packing_equivalence(const SuiteOptions& opts) {
  constexpr size_t kChunk = 1024;
  return gather("packing", 65536 / kChunk, opts, [](size_t chunk) {
    Outcome o;
    for (size_t v = chunk * kChunk; v < (chunk + 1) * kChunk; ++v) {
      BooleanFunction f = BooleanFunction::from_words(4, {v});
      Packing pk = max_disjoint_onesets(f);
      for (int n = 3; n <= 5; ++n) {
        RelationPair p(WeightSet::of(n, {1}), WeightSet::range(n, 0, n - 2));
        bool compatible = is_compatible(f, p);
        bool small = !pk.unbounded && static_cast<int>(pk.size()) < n - 1;
        o.check(compatible == small, [&] {
          return "f=" + f.to_hex() + " n=" + std::to_string(n) + " compatible=" + std::to_string(compatible) +
                 " packing=" + (pk.unbounded ? std::string("unbounded") : std::to_string(pk.size()));
        });
      }
    }
    return o;
  });
}

// Templates holding `base` alone or together with one pair of arity <= 3.
std::vector<Template> union_templates(const RelationPair& base) {
  std::vector<Template> out{Template({base})};
  for (const auto& s : strict_sides(1, 3))
    for (uint64_t jm = 0; jm < (uint64_t{1} << (s.n + 1)); ++jm) {
      Template t({base, RelationPair(s.strict, WeightSet(s.n, jm))});
      if (!unary_homomorphisms(t).empty()) out.push_back(t);
    }
  return out;
}

// Every union of `count` pairwise disjoint sets from `from` must satisfy `target`.
bool unions_hold(const BooleanFunction& f, const std::vector<VarSet>& from, int count,
                 const std::function<bool(VarSet)>& target, std::string& bad) {
  std::function<bool(size_t, int, VarSet)> rec = [&](size_t start, int left, VarSet acc) {
    if (left == 0) {
      if (target(acc)) return true;
      std::ostringstream os;
      os << "f=" << f.to_hex() << "/" << f.arity() << " union {";
      for (int m : members(acc)) os << " " << m;
      os << " }";
      bad = os.str();
      return false;
    }
    for (size_t i = start; i < from.size(); ++i)
      if ((from[i] & acc) == 0 && !rec(from[i] == 0 ? i : i + 1, left - 1, acc | from[i])) return false;
    return true;
  };
  return rec(0, count, 0);
}

enum class UnionShape { Literal, Crel, Arel };

// Literal: <1,{0..a},a+1> with unions of zerosets; Crel: the same pair with
// unions of onesets; Arel: <a,{1..a+1},a+1> with unions of zerosets.
SuiteResult union_lemma(const std::string& name, UnionShape shape, const SuiteOptions& opts) {
  std::vector<std::pair<int, Template>> work;
  for (int a = 1; a <= 2; ++a) {
    RelationPair base = shape == UnionShape::Arel
                            ? RelationPair(WeightSet::of(a + 1, {a}), WeightSet::range(a + 1, 1, a + 1))
                            : RelationPair(WeightSet::of(a + 1, {1}), WeightSet::range(a + 1, 0, a));
    for (auto& t : union_templates(base)) work.push_back({a, t});
  }
  return gather(name, work.size(), opts, [&](size_t idx) {
    Outcome o;
    const auto& [a, t] = work[idx];
    for (int k = 1; k <= 4; ++k)
      for (const auto& f : enumerate_polymorphisms(t, k)) {
        std::string bad;
        bool ok = shape == UnionShape::Crel
                      ? unions_hold(f, onesets(f), a, [&](VarSet u) { return is_zeroset(f, u); }, bad)
                      : unions_hold(f, zerosets(f), a, [&](VarSet u) { return is_oneset(f, u); }, bad);
        o.check(ok, [&] { return t.str() + " a=" + std::to_string(a) + " " + bad; });
      }
    return o;
  });
}

SuiteResult at_claim(const std::string& name, std::initializer_list<int> arities, const SuiteOptions& opts) {
  auto sides = strict_sides(1, 6);
  auto fs = at_members(arities);
  return gather(name, sides.size(), opts, [&](size_t idx) {
    Outcome o;
    const auto& s = sides[idx];
    WeightSet reached = union_of_outputs(fs, s.strict);
    WeightSet claimed = orbit_at(s.strict);
    o.check(reached == claimed, [&] {
      return "I=" + s.strict.str() + " k=" + std::to_string(s.n) + ": claim " + claimed.str() + ", brute force " +
             reached.str();
    });
    return o;
  });
}

SuiteResult an_at_equivalence(const SuiteOptions& opts) {
  auto sides = strict_sides(1, 4);
  std::vector<BooleanFunction> an;
  for (int m = 1; m <= 7; ++m) an.push_back(make_almost_negation(m));
  auto at = at_members({3, 5, 7});
  return gather("an-at", sides.size(), opts, [&](size_t idx) {
    Outcome o;
    const auto& s = sides[idx];
    WeightSet by_an = union_of_outputs(an, s.strict);
    WeightSet by_at = union_of_outputs(at, s.strict);
    for (uint64_t jm = 0; jm < (uint64_t{1} << (s.n + 1)); ++jm) {
      WeightSet j(s.n, jm);
      o.check(by_an.subset_of(j) == by_at.subset_of(j), [&] {
        return RelationPair(s.strict, j).str() + ": AN reaches " + by_an.str() + ", AT reaches " + by_at.str();
      });
    }
    return o;
  });
}

SuiteResult solver_end_to_end(const SuiteOptions& opts) {
  static const FamilyTag kClasses[] = {FamilyTag::Const0, FamilyTag::Max, FamilyTag::Min,
                                       FamilyTag::Xor,    FamilyTag::AT,  FamilyTag::Thr};
  constexpr size_t kPerClass = 500, kPerTemplate = 5;
  std::vector<std::optional<Template>> templates(6 * kPerClass / kPerTemplate);
  for (size_t i = 0; i < templates.size(); ++i) {
    size_t cls = i / (kPerClass / kPerTemplate);
    FamilyTag tag = kClasses[cls];
    if (tag == FamilyTag::Const0 && i % 2) tag = FamilyTag::Const1;
    Rng rng(opts.seed * 7919 + i);
    templates[i] = random_template_for(tag, rng, 3, 5);
  }
  SuiteResult r = gather("solver", 6 * kPerClass, opts, [&](size_t idx) {
    Outcome o;
    const auto& t = templates[idx / kPerTemplate];
    const char* cls = family_tag_name(kClasses[idx / kPerClass]);
    if (!t) {
      o.check(false, [&] { return std::string(cls) + ": no template found"; });
      return o;
    }
    Rng rng(opts.seed * 104729 + idx);
    int vars = std::uniform_int_distribution<int>(5, 12)(rng);
    int cons = std::uniform_int_distribution<int>(1, 8)(rng);
    PlantedInstance pi = planted_instance(*t, vars, cons, rng);
    auto t0 = Clock::now();
    SolveResult x = solve(pi.instance, *t);
    double s = since(t0);
    o.worst = s;
    bool ok = x && check_assignment(pi.instance, *t, *x, Side::B) && s < 1.0;
    o.check(ok, [&] {
      return std::string(cls) + " " + t->str() + ": " + (x ? "assignment fails side B" : "no assignment") +
             " (" + std::to_string(s) + " s)";
    });
    return o;
  });
  return r;
}

struct DerivedPair {
  RelationPair pair;
  bool flipped = false;
  std::string how;
};

void move_chains(const RelationPair& start, bool flipped, const std::string& prefix, std::vector<DerivedPair>& out) {
  out.push_back({start, flipped, prefix});
  if (start.arity() < 2) return;
  for (bool left : {true, false}) {
    RelationPair next = left ? move_left(start) : move_right(start);
    if (next.strict.empty()) continue;
    move_chains(next, flipped, prefix + (left ? ",move-left" : ",move-right"), out);
  }
}

SuiteResult galois_soundness(const SuiteOptions& opts) {
  constexpr size_t kTemplates = 100;
  return gather("galois", kTemplates, opts, [&](size_t idx) {
    Outcome o;
    Rng rng(opts.seed * 15485863 + idx);
    Template closure = add_idempotents(random_template(rng, 3, 4));
    std::vector<BooleanFunction> pol;
    for (int k = 1; k <= 3; ++k)
      for (auto& f : enumerate_polymorphisms(closure, k)) pol.push_back(std::move(f));
    std::vector<DerivedPair> derived;
    for (size_t p = 0; p < closure.pairs.size(); ++p) {
      const auto& pair = closure.pairs[p];
      std::string src = "pair " + std::to_string(p);
      move_chains(pair, false, src, derived);
      move_chains(flip_pair(pair), true, src + ",flip", derived);
      WeightSet sub = WeightSet::none(pair.arity());
      for (int w : pair.strict.elements())
        if (std::bernoulli_distribution(0.6)(rng)) sub.insert(w);
      if (sub.empty()) sub.insert(pair.strict.min());
      WeightSet sup = pair.relaxed;
      for (int w = 0; w <= pair.arity(); ++w)
        if (std::bernoulli_distribution(0.3)(rng)) sup.insert(w);
      RelationPair relaxed = strict_relax(pair, sub, sup);
      move_chains(relaxed, false, src + ",strict:" + sub.str() + "/" + sup.str(), derived);
    }
    auto from_chain = [&](const Derivation& d, const char* what) {
      bool flipped = false;
      for (const auto& s : d.steps) flipped = flipped != (s.kind == StepKind::Flip);
      o.check(replay(closure, d) == d.result, [&] { return closure.str() + ": " + what + " chain does not replay"; });
      derived.push_back({d.result, flipped, what});
    };
    if (auto w = derive_arel_witness(closure)) from_chain(w->derivation, "arel");
    if (auto w = derive_crel_witness(closure)) from_chain(w->derivation, "crel");
    try {
      if (auto w = extract_no_at_witness(closure)) from_chain(w->derivation, "no-at");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateChain) throw;
    }
    for (const auto& f : pol) {
      BooleanFunction fd = f.dual();
      for (const auto& d : derived)
        o.check(is_compatible(d.flipped ? fd : f, d.pair), [&] {
          return closure.str() + ": f=" + f.to_hex() + "/" + std::to_string(f.arity()) + " breaks " + d.pair.str() +
                 " from " + d.how;
        });
    }
    return o;
  });
}

SuiteResult example_function(const SuiteOptions& opts) {
  return gather("example-function", 1, opts, [](size_t) {
    Outcome o;
    BooleanFunction thr = make_thr(Rational(1, 2), 5);
    BooleanFunction f = BooleanFunction::from_predicate(6, [&](VarSet u) { return (u & 1) || thr(u >> 1); });
    Template t = example_template();
    o.check(is_polymorphism(f, t), [] { return std::string("max(x1, thr(x2..x6)) is not a polymorphism"); });
    auto fix = smallest_fixing_set(f);
    auto one = smallest_onefset(f);
    auto zero = smallest_zerofset(f);
    o.check(fix && fix->kind == FixKind::One && one && std::popcount(fix->set) == std::popcount(*one),
            [] { return std::string("smallest fixing set is not the one-side set"); });
    o.check(one && (!zero || std::popcount(*zero) >= std::popcount(*one)), [&] {
      return "zerofset of size " + std::to_string(zero ? std::popcount(*zero) : -1) + " beats onefset of size " +
             std::to_string(one ? std::popcount(*one) : -1);
    });
    return o;
  });
}

SuiteResult solver_certificates(const SuiteOptions& opts) {
  static const FamilyTag kClasses[] = {FamilyTag::Xor, FamilyTag::AT, FamilyTag::Thr};
  constexpr size_t kPer = 60;
  return gather("solver-certificates", 3 * kPer, opts, [&](size_t idx) {
    Outcome o;
    FamilyTag tag = kClasses[idx / kPer];
    Rng rng(opts.seed * 32452843 + idx);
    auto t = random_template_for(tag, rng, 3, 5);
    if (!t) return o;
    auto c = classify(*t);
    PlantedInstance pi = planted_instance(*t, std::uniform_int_distribution<int>(5, 12)(rng), 6, rng);
    const auto& inst = pi.instance;
    std::string where = std::string(family_tag_name(tag)) + " " + t->str();
    if (c.witness->complemented) return o;
    if (tag == FamilyTag::Xor) {
      for (const auto& eq : xor_system(inst, *t)) {
        bool parity = false;
        for (int v : eq.support) parity = parity != (pi.planted[v] != 0);
        o.check(parity == eq.rhs, [&] { return where + ": planted solution violates a parity equation"; });
      }
    } else if (tag == FamilyTag::AT) {
      auto sol = solve_lattice(inst, *t);
      o.check(sol.has_value(), [&] { return where + ": no lattice point"; });
      if (!sol) return o;
      for (size_t ci = 0; ci < inst.constraints.size(); ++ci) {
        const auto& con = inst.constraints[ci];
        auto model = lattice_model(t->pairs[con.pair]);
        bool ok = true;
        for (size_t p = 0; p < con.scope.size(); ++p) {
          mpz_class v = model.base[p];
          for (size_t g = 0; g < model.generators.size(); ++g) v += sol->coefficients[ci][g] * model.generators[g][p];
          ok = ok && v == sol->point[con.scope[p]];
        }
        o.check(ok, [&] { return where + ": lattice certificate does not replay"; });
      }
    } else {
      auto lp = solve_threshold_lp(inst, *t, c.witness->q);
      o.check(lp.has_value(), [&] { return where + ": LP infeasible on a planted instance"; });
      if (!lp) return o;
      std::vector<bool> used(inst.variables, false);
      for (const auto& con : inst.constraints)
        for (int v : con.scope) used[v] = true;
      bool ok = true;
      for (int v = 0; v < inst.variables; ++v)
        ok = ok && !(used[v] && lp->x[v] == c.witness->q) && lp->x[v] >= Rational(0) && lp->x[v] <= Rational(1);
      for (size_t ci = 0; ci < inst.constraints.size(); ++ci) {
        const auto& con = inst.constraints[ci];
        int n = t->pairs[con.pair].arity();
        auto levels = t->pairs[con.pair].strict.elements();
        Rational total(0);
        for (const auto& m : lp->mass[ci]) {
          ok = ok && m >= Rational(0);
          total += m;
        }
        ok = ok && total == Rational(1);
        for (int p = 0; p < n; ++p) {
          Rational x(0);
          for (size_t k = 0; k < levels.size(); ++k) {
            if (!lp->split[ci][k].empty()) x += lp->split[ci][k][p];
            else if (levels[k] == n) x += lp->mass[ci][k];
          }
          ok = ok && x == lp->x[con.scope[p]];
        }
        for (size_t k = 0; k < levels.size(); ++k) {
          if (lp->split[ci][k].empty()) continue;
          Rational sum(0);
          for (const auto& z : lp->split[ci][k]) {
            ok = ok && z >= Rational(0) && z <= lp->mass[ci][k];
            sum += z;
          }
          ok = ok && sum == Rational(levels[k]) * lp->mass[ci][k];
        }
      }
      o.check(ok, [&] { return where + ": LP point violates a constraint or ties at q"; });
    }
    return o;
  });
}

using Runner = std::function<SuiteResult(const SuiteOptions&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"classify-goldens", classify_goldens},
      {"orbit", [](const SuiteOptions& o) { return orbit_equivalence("orbit", 7, o); }},
      {"threshold", [](const SuiteOptions& o) { return threshold_characterization("threshold", 12, o); }},
      {"packing", packing_equivalence},
      {"union", [](const SuiteOptions& o) { return union_lemma("union", UnionShape::Literal, o); }},
      {"at-claim", [](const SuiteOptions& o) { return at_claim("at-claim", {3, 5, 7}, o); }},
      {"an-at", an_at_equivalence},
      {"solver", solver_end_to_end},
      {"galois", galois_soundness},
      {"example-function", example_function},
      {"orbit-extended", [](const SuiteOptions& o) { return orbit_equivalence("orbit-extended", 13, o); }},
      {"threshold-extended",
       [](const SuiteOptions& o) { return threshold_characterization("threshold-extended", 24, o); }},
      {"union-crel", [](const SuiteOptions& o) { return union_lemma("union-crel", UnionShape::Crel, o); }},
      {"union-arel", [](const SuiteOptions& o) { return union_lemma("union-arel", UnionShape::Arel, o); }},
      {"at-claim-extended",
       [](const SuiteOptions& o) { return at_claim("at-claim-extended", {1, 3, 5, 7, 9, 11, 13}, o); }},
      {"solver-certificates", solver_certificates},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, run] : registry())
    if (n == name) return run(opts);
  throw Error(ErrorCode::InvalidInput, "unknown suite \"" + name + "\"");
}

}  // namespace spcsp
