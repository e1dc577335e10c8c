#include <doctest.h>

#include <random>

#include "spcsp/linalg.hpp"

using namespace spcsp::linalg;

namespace {

BitRow row(int width, std::initializer_list<int> ones) {
  BitRow r(width);
  for (int i : ones) r.set(i, true);
  return r;
}

bool satisfies(const std::vector<Gf2Equation>& eqs, const std::vector<uint8_t>& x) {
  for (const auto& e : eqs) {
    bool s = false;
    for (int i = 0; i < e.lhs.width(); ++i)
      if (e.lhs.get(i) && x[i]) s = !s;
    if (s != e.rhs) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("bit rows") {
  BitRow r(130);
  CHECK_FALSE(r.any());
  CHECK(r.first() == -1);
  r.set(129, true);
  r.flip(64);
  CHECK(r.first() == 64);
  BitRow s = row(130, {64, 3});
  r ^= s;
  CHECK(r.first() == 3);
  CHECK(r.dot(row(130, {3, 129})) == false);
  CHECK(r.dot(row(130, {129})) == true);
}

TEST_CASE("gf2 solving") {
  std::vector<Gf2Equation> eqs{{row(3, {0, 1}), true}, {row(3, {1, 2}), false}};
  auto x = solve_gf2(eqs, 3);
  REQUIRE(x);
  CHECK(satisfies(eqs, *x));
  eqs.push_back({row(3, {0, 2}), false});
  CHECK_FALSE(solve_gf2(eqs, 3));
  CHECK(solve_gf2({{BitRow(2), true}}, 2) == std::nullopt);
  CHECK(solve_gf2({}, 2) == std::vector<uint8_t>{0, 0});

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    int vars = 1 + static_cast<int>(rng() % 10), count = static_cast<int>(rng() % 12);
    std::vector<Gf2Equation> sys;
    for (int e = 0; e < count; ++e) {
      BitRow r(vars);
      for (int i = 0; i < vars; ++i) r.set(i, rng() & 1);
      sys.push_back({r, static_cast<bool>(rng() & 1)});
    }
    bool any = false;
    for (uint32_t m = 0; m < (1u << vars) && !any; ++m) {
      std::vector<uint8_t> x(vars);
      for (int i = 0; i < vars; ++i) x[i] = (m >> i) & 1u;
      any = satisfies(sys, x);
    }
    auto got = solve_gf2(sys, vars);
    CHECK(got.has_value() == any);
    if (got) CHECK(satisfies(sys, *got));
  }
}

TEST_CASE("affine equations describe the span") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int width = 1 + static_cast<int>(rng() % 7);
    BitRow base(width);
    for (int i = 0; i < width; ++i) base.set(i, rng() & 1);
    std::vector<BitRow> dirs;
    for (int d = static_cast<int>(rng() % 4); d > 0; --d) {
      BitRow r(width);
      for (int i = 0; i < width; ++i) r.set(i, rng() & 1);
      dirs.push_back(r);
    }
    std::vector<bool> in(1u << width, false);
    for (uint32_t c = 0; c < (1u << dirs.size()); ++c) {
      BitRow p = base;
      for (size_t d = 0; d < dirs.size(); ++d)
        if ((c >> d) & 1u) p ^= dirs[d];
      uint32_t m = 0;
      for (int i = 0; i < width; ++i) m |= static_cast<uint32_t>(p.get(i)) << i;
      in[m] = true;
    }
    auto eqs = affine_equations(base, dirs);
    for (uint32_t m = 0; m < (1u << width); ++m) {
      std::vector<uint8_t> x(width);
      for (int i = 0; i < width; ++i) x[i] = (m >> i) & 1u;
      CHECK(satisfies(eqs, x) == in[m]);
    }
  }
}

TEST_CASE("integer systems") {
  IntMatrix a{{2, 4}};
  CHECK_FALSE(solve_integer(a, {3}, 2));
  auto y = solve_integer(a, {6}, 2);
  REQUIRE(y);
  CHECK(2 * (*y)[0] + 4 * (*y)[1] == 6);
  IntMatrix b{{3, 5, 0}, {0, 1, 1}};
  auto z = solve_integer(b, {1, 7}, 3);
  REQUIRE(z);
  CHECK(3 * (*z)[0] + 5 * (*z)[1] == 1);
  CHECK((*z)[1] + (*z)[2] == 7);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 3), cols = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(rows, std::vector<mpz_class>(cols));
    for (auto& r : m)
      for (auto& v : r) v = static_cast<long>(rng() % 7) - 3;
    std::vector<mpz_class> sol(cols), rhs(rows, 0);
    for (auto& v : sol) v = static_cast<long>(rng() % 9) - 4;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) rhs[r] += m[r][c] * sol[c];
    auto got = solve_integer(m, rhs, cols);
    REQUIRE(got);
    for (int r = 0; r < rows; ++r) {
      mpz_class s = 0;
      for (int c = 0; c < cols; ++c) s += m[r][c] * (*got)[c];
      CHECK(s == rhs[r]);
    }
  }
}

TEST_CASE("simplex feasibility") {
  RatMatrix a{{1, 1}, {1, -1}};
  auto x = feasible_point(a, {2, 0}, 2);
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(feasible_point({{1, 1}}, {-1}, 2));
  CHECK_FALSE(feasible_point({{1, 0}, {1, 0}}, {1, 2}, 2));
  auto neg = feasible_point({{-1, 1}}, {-3}, 2);
  REQUIRE(neg);
  CHECK((*neg)[0] - (*neg)[1] == 3);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 5);
    RatMatrix m(rows, std::vector<mpq_class>(cols));
    for (auto& r : m)
      for (auto& v : r) v = static_cast<long>(rng() % 7) - 3;
    std::vector<mpq_class> pt(cols), rhs(rows, 0);
    for (auto& v : pt) v = mpq_class(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
    for (auto& v : pt) v.canonicalize();
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) rhs[r] += m[r][c] * pt[c];
    auto got = feasible_point(m, rhs, cols);
    REQUIRE(got);
    for (int c = 0; c < cols; ++c) CHECK((*got)[c] >= 0);
    for (int r = 0; r < rows; ++r) {
      mpq_class s = 0;
      for (int c = 0; c < cols; ++c) s += m[r][c] * (*got)[c];
      CHECK(s == rhs[r]);
    }
  }
}
