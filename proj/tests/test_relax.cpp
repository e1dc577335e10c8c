#include <doctest.h>

#include "spcsp/analysis.hpp"
#include "spcsp/error.hpp"
#include "spcsp/orbit.hpp"
#include "spcsp/relax.hpp"

using namespace spcsp;

namespace {

RelationPair P(std::initializer_list<int> i, std::initializer_list<int> j, int n) {
  return RelationPair::of(std::vector<int>(i), std::vector<int>(j), n);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("strict relaxation") {
  CHECK(strict_relax(P({1, 2}, {1, 2, 3}, 3), WeightSet::of(3, {1}), WeightSet::full(3)) == P({1}, {0, 1, 2, 3}, 3));
  auto p = P({2}, {0, 2, 3}, 3);
  CHECK(strict_relax(p, p.strict, p.relaxed) == p);
  CHECK(code_of([&] { strict_relax(p, WeightSet::of(3, {3}), p.relaxed); }) == ErrorCode::NotARelaxation);
  CHECK(code_of([&] { strict_relax(p, p.strict, WeightSet::of(3, {0})); }) == ErrorCode::NotARelaxation);
}

TEST_CASE("moving left and right") {
  auto p = P({0, 1, 4, 5}, {0, 1, 2, 3, 4, 5}, 5);
  CHECK(move_left(p) == P({0, 3, 4}, {0, 1, 2, 3, 4}, 4));
  CHECK(move_right(move_left(p)) == P({0, 3}, {0, 1, 2, 3}, 3));
  CHECK(move_left(P({4}, {4}, 4)) == P({3}, {3}, 3));
  CHECK(move_left(P({0}, {0}, 2)).strict.empty());
  CHECK(code_of([] { validate_pair(move_left(P({0}, {0}, 2))); }) == ErrorCode::EmptyStrictRelation);
  CHECK(move_right(P({0}, {0}, 2)) == P({0}, {0}, 1));
  CHECK(move_right(P({2}, {2}, 2)).strict.empty());
  CHECK(code_of([] { move_left(P({1}, {1}, 1)); }) == ErrorCode::ArityUnderflow);
  CHECK(code_of([] { move_right(P({1}, {1}, 1)); }) == ErrorCode::ArityUnderflow);
}

TEST_CASE("moves commute") {
  for (int n = 3; n <= 5; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m)
      for (uint64_t jm = 0; jm < (uint64_t{1} << (n + 1)); jm += 3) {
        RelationPair p(WeightSet(n, m), WeightSet(n, jm));
        CHECK(move_left(move_right(p)) == move_right(move_left(p)));
      }
}

TEST_CASE("flips and idempotent closure") {
  Template t({P({1}, {1, 2}, 3)});
  CHECK(flip_template(t) == Template({P({2}, {1, 2}, 3)}));
  CHECK(flip_codomain(t) == t);
  CHECK(flip_template(flip_template(t)) == t);
  Template e = add_idempotents(Template());
  CHECK(e.pairs == std::vector<RelationPair>{P({0}, {0}, 1), P({1}, {1}, 1)});
  CHECK(e.idempotent_closure);
  CHECK(add_idempotents(e) == e);
  CHECK(add_idempotents(t).pairs.size() == 3);
}

TEST_CASE("arel witness") {
  auto w = derive_arel_witness(add_idempotents(Template({P({2}, {0, 2, 3}, 3)})));
  REQUIRE(w);
  CHECK(w->a == 2);
  CHECK(w->b == 1);
  CHECK(w->derivation.result == P({1}, {1, 2}, 2));
  CHECK_FALSE(derive_arel_witness(Template({P({1}, {0, 1}, 1)})));
  Template ex = add_idempotents(Template({P({1}, {1, 2}, 3), P({1}, {1, 2}, 4)}));
  auto w2 = derive_arel_witness(ex);
  REQUIRE(w2);
  CHECK(w2->a == 1);
  CHECK(w2->b == 0);
  CHECK(w2->derivation.result == P({1}, {1, 2}, 2));
  CHECK(replay(ex, w2->derivation) == w2->derivation.result);
}

TEST_CASE("crel witness") {
  Template t({P({1}, {1, 2}, 3)});
  auto w = derive_crel_witness(t);
  REQUIRE(w);
  CHECK(w->a == 1);
  CHECK(w->b == 3);
  CHECK(w->derivation.result == P({1}, {0, 1, 2}, 3));
  CHECK(replay(t, w->derivation) == w->derivation.result);
  CHECK_FALSE(derive_crel_witness(Template({P({1}, {1, 2, 3}, 3)})));
}

TEST_CASE("crel is the flip of arel on the flipped template") {
  for (int n = 1; n <= 4; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m)
      for (uint64_t jm = 0; jm < (uint64_t{1} << (n + 1)); ++jm) {
        Template t({RelationPair(WeightSet(n, m), WeightSet(n, jm))});
        auto c = derive_crel_witness(t);
        auto a = derive_arel_witness(flip_template(t));
        REQUIRE(c.has_value() == a.has_value());
        if (c) CHECK(c->derivation.result == flip_pair(a->derivation.result));
      }
}

TEST_CASE("arel exists exactly when Min fails") {
  for (int n = 1; n <= 4; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m)
      for (uint64_t jm = 0; jm < (uint64_t{1} << (n + 1)); ++jm) {
        RelationPair p(WeightSet(n, m), WeightSet(n, jm));
        if (!p.strict.subset_of(p.relaxed)) continue;
        Template t({p});
        CHECK(derive_arel_witness(t).has_value() == family_compatible(Family::of(FamilyTag::Min), t).has_value());
      }
}

TEST_CASE("no-AT witnesses") {
  auto w = extract_no_at_witness(add_idempotents(Template({P({1}, {1, 2}, 4)})));
  REQUIRE(w);
  CHECK(w->shape == NoAtShape::MiddleGap);
  CHECK_FALSE(w->flipped);
  CHECK(w->derivation.result == middle_gap_pair(4));
  CHECK_FALSE(extract_no_at_witness(add_idempotents(Template({P({1}, {1, 2}, 3)}))));
}

TEST_CASE("no-AT witness shapes and self-check") {
  for (int n = 1; n <= 5; ++n)
    for (uint64_t m = 1; m < (uint64_t{1} << (n + 1)); ++m)
      for (uint64_t jm = 0; jm < (uint64_t{1} << (n + 1)); ++jm) {
        RelationPair p(WeightSet(n, m), WeightSet(n, jm));
        if (!p.strict.subset_of(p.relaxed)) continue;
        Template t = add_idempotents(Template({p}));
        auto w = extract_no_at_witness(t);
        CHECK(w.has_value() == !orbit_at(p.strict).subset_of(p.relaxed));
        if (!w) continue;
        const auto& r = w->derivation.result;
        CHECK(replay(t, w->derivation) == r);
        if (w->shape == NoAtShape::MiddleGap) {
          CHECK(r == middle_gap_pair(r.arity()));
        } else {
          CHECK(r.strict.size() == 2);
          CHECK(r == no_extremes_pair(r.strict.max(), r.arity()));
        }
        CHECK_FALSE(orbit_at(r.strict).subset_of(r.relaxed));
      }
}

TEST_CASE("replay rejects chains that empty the strict side") {
  Template t({P({0}, {0}, 2)});
  Derivation d{0, {RelaxationStep::move_left()}, {}};
  CHECK(code_of([&] { replay(t, d); }) == ErrorCode::DegenerateChain);
}
