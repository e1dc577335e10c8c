#include "spcsp/generate.hpp"

#include <algorithm>

#include "spcsp/classifier.hpp"
#include "spcsp/error.hpp"

namespace spcsp {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

WeightSet random_subset(Rng& rng, int n, double p) {
  WeightSet s = WeightSet::none(n);
  for (int w = 0; w <= n; ++w)
    if (coin(rng, p)) s.insert(w);
  return s;
}

WeightSet random_nonempty(Rng& rng, int n) {
  for (;;) {
    WeightSet s = random_subset(rng, n, 0.35);
    if (!s.empty()) return s;
  }
}

WeightSet thr_orbit(const Rational& q, const WeightSet& i) {
  int n = i.bound();
  long r = q.denominator().get_si();
  WeightSet out = WeightSet::none(n);
  for (int m = 1; m <= 2 * r * n; ++m) out = out.unite(thr_output_weights(q, i, m));
  return out;
}

}  // namespace

PlantedInstance planted_instance(const Template& t, int variables, int constraints, Rng& rng) {
  PlantedInstance out;
  out.instance.variables = variables;
  out.planted.resize(variables);
  std::vector<int> ones, zeros;
  for (int v = 0; v < variables; ++v) {
    out.planted[v] = coin(rng, 0.5) ? 1 : 0;
    (out.planted[v] ? ones : zeros).push_back(v);
  }
  int n1 = static_cast<int>(ones.size()), n0 = static_cast<int>(zeros.size());
  std::vector<std::pair<int, int>> options;  // (pair, weight)
  for (size_t p = 0; p < t.pairs.size(); ++p) {
    int n = t.pairs[p].arity();
    for (int w : t.pairs[p].strict.elements())
      if (w <= n1 && n - w <= n0) options.push_back({static_cast<int>(p), w});
  }
  if (options.empty()) return out;
  for (int c = 0; c < constraints; ++c) {
    auto [p, w] = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
    int n = t.pairs[p].arity();
    std::shuffle(ones.begin(), ones.end(), rng);
    std::shuffle(zeros.begin(), zeros.end(), rng);
    Constraint con{p, {}};
    con.scope.insert(con.scope.end(), ones.begin(), ones.begin() + w);
    con.scope.insert(con.scope.end(), zeros.begin(), zeros.begin() + (n - w));
    std::shuffle(con.scope.begin(), con.scope.end(), rng);
    out.instance.constraints.push_back(std::move(con));
  }
  return out;
}

RelationPair random_pair(Rng& rng, int max_arity) {
  int n = uniform(rng, 1, max_arity);
  return RelationPair(random_nonempty(rng, n), random_subset(rng, n, 0.5));
}

Template random_template(Rng& rng, int max_pairs, int max_arity) {
  for (;;) {
    Template t;
    int count = uniform(rng, 1, max_pairs);
    for (int i = 0; i < count; ++i) t.pairs.push_back(random_pair(rng, max_arity));
    if (!unary_homomorphisms(t).empty()) return t;
  }
}

std::optional<Template> random_template_for(FamilyTag tag, Rng& rng, int max_pairs, int max_arity,
                                            int attempts) {
  static const Rational kQs[] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5}};
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Rational q = kQs[uniform(rng, 0, 5)];
    Template t;
    int count = uniform(rng, 1, max_pairs);
    for (int i = 0; i < count; ++i) {
      int n = uniform(rng, 2, max_arity);
      WeightSet s = random_nonempty(rng, n);
      WeightSet j = random_subset(rng, n, 0.15);
      switch (tag) {
        case FamilyTag::Const0: j.insert(0); break;
        case FamilyTag::Const1: j.insert(n); break;
        case FamilyTag::Thr: j = j.unite(thr_orbit(q, s)); break;
        default: j = j.unite(family_orbit(tag, s)); break;
      }
      t.pairs.push_back(RelationPair(s, j));
    }
    if (unary_homomorphisms(t).empty()) continue;
    Classification c = classify(t);
    if (c.witness && c.witness->tag == tag) return t;
  }
  return std::nullopt;
}

}  // namespace spcsp
