#include <doctest.h>

#include "oracles.hpp"
#include "spcsp/analysis.hpp"
#include "spcsp/orbit.hpp"
#include "spcsp/relax.hpp"

using namespace spcsp;

namespace {

WeightSet ws(int n, std::initializer_list<int> w) { return WeightSet::of(n, w); }

}  // namespace

TEST_CASE("orbit goldens") {
  CHECK(orbit_max(ws(3, {1})) == ws(3, {1, 2, 3}));
  CHECK(orbit_max(ws(3, {0})) == ws(3, {0}));
  CHECK(orbit_max(ws(4, {0, 2})) == ws(4, {0, 2, 3, 4}));
  CHECK(orbit_min(ws(3, {2})) == ws(3, {0, 1, 2}));
  CHECK(orbit_min(ws(3, {3})) == ws(3, {3}));
  CHECK(orbit_min(ws(3, {1, 3})) == ws(3, {0, 1, 3}));
  CHECK(orbit_at(ws(3, {1})) == ws(3, {1, 2}));
  CHECK(orbit_at(ws(3, {0, 3})) == ws(3, {0, 3}));
  CHECK(orbit_at(ws(4, {1, 2})) == WeightSet::full(4));
  CHECK(xor3_achievable(1, 1, 1, 3) == ws(3, {1, 3}));
  CHECK(xor3_achievable(0, 0, 0, 4) == ws(4, {0}));
  CHECK(xor3_achievable(2, 2, 2, 3) == ws(3, {0, 2}));
  CHECK(orbit_xor(ws(3, {1})) == ws(3, {1, 3}));
  CHECK(orbit_xor(ws(5, {5})) == ws(5, {5}));
  CHECK(orbit_xor(ws(3, {1, 2})) == WeightSet::full(3));
}

TEST_CASE("max, min and xor orbits match closure oracles") {
  for (int n = 1; n <= 5; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m) {
      WeightSet i(n, m);
      CHECK(orbit_max(i) == oracle::closure_weights(i, 2, [](uint32_t a, uint32_t b, uint32_t) { return a | b; }));
      CHECK(orbit_min(i) == oracle::closure_weights(i, 2, [](uint32_t a, uint32_t b, uint32_t) { return a & b; }));
      CHECK(orbit_xor(i) ==
            oracle::closure_weights(i, 3, [](uint32_t a, uint32_t b, uint32_t c) { return a ^ b ^ c; }));
    }
}

TEST_CASE("xor3 kernel matches direct set enumeration") {
  for (int n = 1; n <= 4; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int c = 0; c <= n; ++c) {
          WeightSet direct = WeightSet::none(n);
          for (uint32_t x = 0; x < (1u << n); ++x)
            for (uint32_t y = 0; y < (1u << n); ++y)
              for (uint32_t z = 0; z < (1u << n); ++z)
                if (std::popcount(x) == a && std::popcount(y) == b && std::popcount(z) == c)
                  direct.insert(std::popcount(x ^ y ^ z));
          CHECK(xor3_achievable(a, b, c, n) == direct);
        }
}

TEST_CASE("orbit monotonicity and idempotency") {
  for (int n = 1; n <= 5; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m)
      for (uint64_t m2 = m; m2 < (uint64_t{1} << (n + 1)); m2 = (m2 + 1) | m) {
        WeightSet i(n, m), j(n, m2);
        REQUIRE(i.subset_of(j));
        for (auto tag : {FamilyTag::Max, FamilyTag::Min, FamilyTag::Xor, FamilyTag::AT})
          CHECK(family_orbit(tag, i).subset_of(family_orbit(tag, j)));
      }
  for (int n = 1; n <= 5; ++n)
    for (auto i : {ws(n, {0}), ws(n, {n}), ws(n, {0, n})})
      for (auto tag : {FamilyTag::Max, FamilyTag::Min, FamilyTag::Xor, FamilyTag::AT}) CHECK(family_orbit(tag, i) == i);
}

TEST_CASE("AT orbit agrees with naive application at small sizes") {
  for (int n = 1; n <= 3; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m) {
      WeightSet i(n, m);
      WeightSet reached = oracle::naive_outputs(make_at(1), i);
      for (int k : {3, 5}) reached = reached.unite(oracle::naive_outputs(make_at(k), i));
      CHECK(reached == orbit_at(i));
    }
}

TEST_CASE("threshold compatibility") {
  auto a = thr_compatible(Rational(1, 3), RelationPair::of({1}, {1, 2}, 3), 12);
  CHECK(a.compatible);
  CHECK_FALSE(a.authoritative);
  auto b = thr_compatible(Rational(1, 2), RelationPair::of({1, 3}, {0, 1, 3, 4}, 4), 12);
  CHECK_FALSE(b.compatible);
  CHECK(b.violating_arity == 3);
  CHECK(b.violating_weight == 2);
  CHECK(thr_compatible(Rational(1, 2), RelationPair::of({0}, {0}, 1)).compatible);
  CHECK(thr_compatible(Rational(1, 2), RelationPair::of({0}, {0}, 1)).authoritative);
}

TEST_CASE("threshold output weights match naive application") {
  for (auto q : {Rational(1, 2), Rational(1, 3), Rational(3, 4)})
    for (int n = 1; n <= 3; ++n)
      for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m)
        for (int k = 1; k <= 4; ++k) {
          if ((q * Rational(k)).is_integer()) continue;
          WeightSet i(n, m);
          CHECK(thr_output_weights(q, i, k) == oracle::naive_outputs(make_thr(q, k), i));
        }
}

TEST_CASE("singleton threshold interval agrees with the sweep") {
  for (auto q : {Rational(1, 2), Rational(1, 3), Rational(2, 5)})
    for (int n = 1; n <= 5; ++n)
      for (int a = 0; a <= n; ++a) {
        WeightSet swept = WeightSet::none(n);
        long r = q.denominator().get_si();
        for (int k = 1; k <= 2 * r * n; ++k) swept = swept.unite(thr_output_weights(q, ws(n, {a}), k));
        CHECK(thr_singleton_interval(q, a, n) == swept);
      }
}

TEST_CASE("family_compatible goldens") {
  Template t({RelationPair::of({1}, {1, 2}, 3)});
  CHECK_FALSE(family_compatible(Family::of(FamilyTag::AT), t).has_value());
  auto w = family_compatible(Family::of(FamilyTag::Max), t);
  REQUIRE(w);
  CHECK(*w == FamilyWitness{0, 3});
  auto w2 = family_compatible(Family::of(FamilyTag::AT), Template({RelationPair::of({1}, {1, 2}, 4)}));
  REQUIRE(w2);
  CHECK(*w2 == FamilyWitness{0, 3});
  CHECK_FALSE(family_compatible(Family::constant(false), Template({RelationPair::of({2}, {0, 1}, 2)})).has_value());
  CHECK(family_compatible(Family::constant(true), Template({RelationPair::of({2}, {0, 1}, 2)})).has_value());
}

TEST_CASE("complement duality") {
  for (int n = 1; n <= 4; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m)
      for (uint64_t jm = 0; jm < (uint64_t{1} << (n + 1)); ++jm) {
        Template t({RelationPair(WeightSet(n, m), WeightSet(n, jm))});
        for (auto tag : {FamilyTag::Max, FamilyTag::Min, FamilyTag::Xor, FamilyTag::AT})
          CHECK(family_compatible(Family::of(tag, true), t).has_value() ==
                family_compatible(Family::of(tag), flip_codomain(t)).has_value());
        for (auto q : {Rational(1, 2), Rational(1, 3)})
          CHECK(family_compatible(Family::thr(q, true), t).has_value() ==
                family_compatible(Family::thr(q), flip_codomain(t)).has_value());
      }
}
