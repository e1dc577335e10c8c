#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "spcsp/linalg.hpp"
#include "spcsp/model.hpp"
#include "spcsp/orbit.hpp"

namespace spcsp {

// Every solver returns nullopt for NoInstance.
using SolveResult = std::optional<Assignment>;

// Classifies t and dispatches on the witness. Throws NotTractable.
SolveResult solve(const Instance& inst, const Template& t);
// Uses the given family; the caller guarantees it is included.
SolveResult solve_with(const Instance& inst, const Template& t, const Family& fam);

SolveResult solve_const(const Instance& inst, bool value);
SolveResult solve_max(const Instance& inst, const Template& t);
SolveResult solve_min(const Instance& inst, const Template& t);
SolveResult solve_xor(const Instance& inst, const Template& t);
SolveResult solve_at(const Instance& inst, const Template& t);
SolveResult solve_thr(const Instance& inst, const Template& t, const Rational& q);

// Throws TooLarge above 25 variables.
SolveResult brute_force_solve(const Instance& inst, const Template& t, Side side);

struct ParityEquation {
  std::vector<int> support;  // sorted variables
  bool rhs = false;
};

std::vector<ParityEquation> xor_system(const Instance& inst, const Template& t);

struct LatticeGenerators {
  std::vector<int> base;
  std::vector<std::vector<int>> generators;
};

LatticeGenerators lattice_model(const RelationPair& pair);

struct LatticeSolution {
  std::vector<mpz_class> point;                      // per variable
  std::vector<std::vector<mpz_class>> coefficients;  // per constraint, per generator
};

std::optional<LatticeSolution> solve_lattice(const Instance& inst, const Template& t);

struct LpSolution {
  std::vector<Rational> x;  // per variable
  // Per constraint: level masses and splits, aligned with the pair's middle levels.
  std::vector<std::vector<Rational>> mass;
  std::vector<std::vector<std::vector<Rational>>> split;
  int lp_solves = 0;
};

// LP point with no coordinate equal to q (used variables only), or nullopt.
std::optional<LpSolution> solve_threshold_lp(const Instance& inst, const Template& t, const Rational& q);

}  // namespace spcsp
