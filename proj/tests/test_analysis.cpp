#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "spcsp/analysis.hpp"
#include "spcsp/error.hpp"
#include "spcsp/relax.hpp"

using namespace spcsp;

namespace {

RelationPair P(std::initializer_list<int> i, std::initializer_list<int> j, int n) {
  return RelationPair::of(std::vector<int>(i), std::vector<int>(j), n);
}

BooleanFunction random_function(std::mt19937_64& rng, int k) {
  std::vector<uint64_t> words((uint64_t{1} << k) / 64 + 1);
  for (auto& w : words) w = rng();
  return BooleanFunction::from_predicate(k, [&](VarSet u) { return (words[u >> 6] >> (u & 63)) & 1u; });
}

BooleanFunction majority3() { return make_thr(Rational(1, 2), 3); }

// Every k-tuple of weight-a rows whose output is all ones has minimal-oneset rows.
bool naive_star_one(const BooleanFunction& f, int a, int n) {
  auto rows = oracle::rows_with_weights(WeightSet::of(n, {a}));
  auto minimal = minimal_onesets(f);
  int k = f.arity();
  std::vector<size_t> pick(k, 0);
  for (;;) {
    bool all_ones = true;
    for (int c = 0; c < n && all_ones; ++c) {
      VarSet col = 0;
      for (int r = 0; r < k; ++r)
        if ((rows[pick[r]] >> c) & 1u) col |= VarSet{1} << r;
      all_ones = f(col);
    }
    if (all_ones) {
      for (int c = 0; c < n; ++c) {
        VarSet col = 0;
        for (int r = 0; r < k; ++r)
          if ((rows[pick[r]] >> c) & 1u) col |= VarSet{1} << r;
        if (std::find(minimal.begin(), minimal.end(), col) == minimal.end()) return false;
      }
    }
    int r = 0;
    while (r < k && ++pick[r] == rows.size()) pick[r++] = 0;
    if (r == k) return true;
  }
}

}  // namespace

TEST_CASE("constructors") {
  CHECK(make_at(3)(0b010));
  CHECK_FALSE(make_at(3)(0b001));
  CHECK(make_at(3)(0b111));
  CHECK(make_thr(Rational(1, 2), 3)(0b011));
  CHECK_FALSE(make_thr(Rational(1, 2), 3)(0b100));
  CHECK_FALSE(make_almost_negation(3)(0b100));
  CHECK(make_max(3)(0b100));
  CHECK_FALSE(make_min(3)(0b110));
  CHECK(make_xor(3)(0b111));
  CHECK(make_const(true, 2)(0));
  CHECK(make_projection(3, 1)(0b010));
  CHECK_FALSE(make_projection(3, 1)(0b101));
  CHECK(make_max(4).to_hex() == "fffe");
}

TEST_CASE("minors") {
  MinorMap all_to_one{1, {0, 0, 0}};
  CHECK(minor(make_xor(3), all_to_one) == make_projection(1, 0));
  CHECK(minor(make_max(3), {2, {0, 1, 1}}) == make_max(2));
  CHECK_THROWS_AS(minor(make_max(3), {2, {0, 1}}), Error);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 4), s = 1 + static_cast<int>(rng() % 4);
    MinorMap pi{m, std::vector<int>(k)}, sigma{s, std::vector<int>(m)};
    for (auto& v : pi.map) v = static_cast<int>(rng() % m);
    for (auto& v : sigma.map) v = static_cast<int>(rng() % s);
    auto f = random_function(rng, k);
    CHECK(minor(minor(f, pi), sigma) == minor(f, compose(pi, sigma)));
  }
}

TEST_CASE("restriction") {
  CHECK(restrict_to(make_max(3), 0b011) == make_max(2));
  CHECK(restrict_to(make_thr(Rational(1, 2), 5), 0b10100) == make_const(false, 2));
  auto f = make_at(5);
  CHECK(restrict_to(f, full_varset(5)) == f);
}

TEST_CASE("onesets and zerosets") {
  CHECK(minimal_onesets(majority3()) == std::vector<VarSet>{0b011, 0b101, 0b110});
  CHECK(onesets(make_const(true, 2)).size() == 4);
  CHECK(onesets(make_const(true, 2)).front() == 0);
  for (VarSet u : zerosets(make_xor(3))) CHECK(std::popcount(u) % 2 == 1);
  CHECK(zerosets(make_xor(3)).size() == 4);
  auto f = make_at(5);
  for (VarSet u = 0; u < 32; ++u) {
    CHECK(is_oneset(f, u) == f(u));
    CHECK(is_zeroset(f, u) == !f(31 & ~u));
  }
  auto ones = onesets(f);
  CHECK(std::is_sorted(ones.begin(), ones.end(), [](VarSet a, VarSet b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : lex_less(a, b);
  }));
}

TEST_CASE("fixing sets") {
  for (int k = 1; k <= 5; ++k) {
    auto s = smallest_fixing_set(make_max(k));
    REQUIRE(s);
    CHECK(s->kind == FixKind::One);
    CHECK(std::popcount(s->set) == 1);
  }
  auto x = smallest_fixing_set(make_xor(3));
  REQUIRE(x);
  CHECK(std::popcount(x->set) == 3);
  CHECK(is_onefix(majority3(), 0b011));
  CHECK_FALSE(is_onefix(majority3(), 0b001));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_function(rng, 4);
    auto one = onefix_table(f), zero = zerofix_table(f);
    for (VarSet u = 0; u < 16; ++u) {
      bool up1 = true, up0 = true;
      for (VarSet v = 0; v < 16; ++v)
        if ((v & u) == u) {
          up1 = up1 && is_oneset(f, v);
          up0 = up0 && is_zeroset(f, v);
        }
      CHECK(one[u] == up1);
      CHECK(zero[u] == up0);
      CHECK(is_onefix(f, u) == up1);
      CHECK(is_zerofix(f, u) == up0);
    }
  }
}

TEST_CASE("packing goldens") {
  CHECK(max_disjoint_onesets(make_max(4)).size() == 4);
  CHECK(max_disjoint_onesets(majority3()).size() == 1);
  CHECK(max_disjoint_onesets(make_xor(5)).size() == 5);
  CHECK(max_disjoint_onesets(make_const(true, 3)).unbounded);
  CHECK(max_disjoint_zerosets(make_min(3)).size() == 3);
  CHECK(max_set_packing({0b0011, 0b0110, 0b1100, 0b1000}).size() == 2);
}

TEST_CASE("packing is pairwise disjoint and maximum") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_function(rng, 4);
    auto p = max_disjoint_onesets(f);
    if (p.unbounded) {
      CHECK(f(0));
      continue;
    }
    VarSet seen = 0;
    for (VarSet s : p.sets) {
      CHECK(is_oneset(f, s));
      CHECK((seen & s) == 0);
      seen |= s;
    }
    size_t best = 0;
    auto ones = onesets(f);
    std::function<void(size_t, VarSet, size_t)> go = [&](size_t from, VarSet used, size_t count) {
      best = std::max(best, count);
      for (size_t c = from; c < ones.size(); ++c)
        if (!(ones[c] & used)) go(c + 1, used | ones[c], count + 1);
    };
    go(0, 0, 0);
    CHECK(p.size() == best);
  }
}

TEST_CASE("compatibility goldens") {
  auto one_in_three = P({1}, {1, 2}, 3);
  CHECK(is_compatible(make_max(2), one_in_three));
  auto w = find_witness(make_max(3), one_in_three);
  REQUIRE(w);
  CHECK(w->output_weight() == 3);
  CHECK(is_compatible(make_const(false, 3), P({1, 2}, {0, 3}, 3)));
  CHECK(is_polymorphism(make_at(3), Template({one_in_three})));
  CHECK_FALSE(is_polymorphism(make_max(3), Template({one_in_three})));
  CHECK(is_polymorphism(make_xor(5), Template()));
}

TEST_CASE("compatibility matches the naive tuple search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 4);
    auto f = random_function(rng, k);
    WeightSet i(n, 1 + rng() % ((uint64_t{1} << (n + 1)) - 1));
    WeightSet j(n, rng() % (uint64_t{1} << (n + 1)));
    WeightSet naive = oracle::naive_outputs(f, i);
    CHECK(output_weights(f, i) == naive);
    RelationPair pair(i, j);
    auto wit = find_witness(f, pair);
    CHECK(wit.has_value() == !naive.subset_of(j));
    if (!wit) continue;
    REQUIRE(wit->rows.size() == static_cast<size_t>(k));
    for (const auto& row : wit->rows) {
      int s = 0;
      for (auto b : row) s += b;
      CHECK(i.contains(s));
    }
    for (int c = 0; c < n; ++c) {
      VarSet col = 0;
      for (int r = 0; r < k; ++r)
        if (wit->rows[r][c]) col |= VarSet{1} << r;
      CHECK(wit->output[c] == f(col));
    }
    CHECK_FALSE(j.contains(wit->output_weight()));
  }
}

TEST_CASE("column multisets account for every matrix") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n) {
      WeightSet i(n, 0b10 | (n > 2 ? 0b1000 : 0));
      for (const auto& cm : column_multisets(k, i)) {
        int total = 0;
        std::vector<int> sums(k, 0);
        for (auto [col, mult] : cm.columns) {
          total += mult;
          for (int r = 0; r < k; ++r)
            if ((col >> r) & 1u) sums[r] += mult;
        }
        CHECK(total == n);
        for (int s : sums) CHECK(i.contains(s));
      }
    }
}

TEST_CASE("enumeration") {
  auto id = enumerate_polymorphisms(add_idempotents(Template()), 1);
  CHECK(id == std::vector<BooleanFunction>{make_projection(1, 0)});
  Template one_in_three({P({1}, {1, 2}, 3)});
  auto unary = enumerate_polymorphisms(one_in_three, 1);
  REQUIRE(unary.size() == 2);
  CHECK(std::find(unary.begin(), unary.end(), make_projection(1, 0)) != unary.end());
  CHECK(std::find(unary.begin(), unary.end(), make_projection(1, 0).negated()) != unary.end());
  CHECK_THROWS_AS(enumerate_polymorphisms(one_in_three, 5), Error);

  Template example = add_idempotents(Template({P({1}, {1, 2}, 3), P({1}, {1, 2}, 4)}));
  for (int k = 2; k <= 3; ++k) {
    size_t brute = 0;
    for (uint64_t m = 0; m < (uint64_t{1} << (1u << k)); ++m)
      if (is_polymorphism(BooleanFunction::from_words(k, {m}), example)) ++brute;
    CHECK(count_polymorphisms(example, k) == brute);
    auto serial = enumerate_polymorphisms(example, k);
    CHECK(serial.size() == brute);
    CHECK(enumerate_polymorphisms(example, k, {3, false}) == serial);
  }
}

TEST_CASE("symmetry classes") {
  CHECK(symmetry_classes(make_max(3)) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(symmetry_classes(make_at(5)) == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(symmetry_classes(make_projection(3, 1)).size() == 2);
}

TEST_CASE("star compatibility") {
  CHECK_FALSE(is_star_compatible(make_const(true, 2), P({1}, {0, 1}, 2), StarSide::One));
  CHECK_THROWS_AS(is_star_compatible(make_max(2), P({1}, {0}, 1), StarSide::One), Error);
  CHECK_THROWS_AS(is_star_compatible(make_max(2), P({1, 2}, {0, 1, 2}, 3), StarSide::One), Error);
  CHECK(is_star_compatible(make_min(2), P({1}, {1, 2}, 2), StarSide::Zero));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3), n = 2 + static_cast<int>(rng() % 3);
    int a = 1 + static_cast<int>(rng() % (n - 1));
    auto f = random_function(rng, k);
    RelationPair one(WeightSet::of(n, {a}), WeightSet::range(n, 0, n - 1));
    bool star = is_star_compatible(f, one, StarSide::One);
    CHECK(star == naive_star_one(f, a, n));
    if (is_compatible(f, one)) CHECK(star);
    RelationPair zero(WeightSet::of(n, {n - a}), WeightSet::range(n, 1, n));
    CHECK(is_star_compatible(f.dual(), zero, StarSide::Zero) == star);
  }
}

TEST_CASE("flippability") {
  for (int k = 1; k <= 7; k += 2) CHECK(is_e_flippable(make_xor(k), 0, FlipKind::Both));
  CHECK_FALSE(is_e_flippable(make_max(4), 1, FlipKind::One));
  CHECK_FALSE(is_e_flippable(make_max(5), 1, FlipKind::Both));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_function(rng, 4);
    CHECK(is_e_flippable(f, 2, FlipKind::Both));
  }
}

TEST_CASE("variable distribution") {
  auto d = variable_distribution(make_max(4), 2);
  CHECK(d.support == 0b1111);
  for (const auto& p : d.probability) CHECK(p == Rational(1, 4));
  auto m = variable_distribution(majority3(), 3);
  CHECK(std::popcount(m.support) == 2);
  CHECK(m.support == 0b011);
  CHECK(m.probability[2] == Rational(0));
  try {
    variable_distribution(make_xor(3), 2);
    FAIL("expected NoSmallFixingSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSmallFixingSet);
  }
}
