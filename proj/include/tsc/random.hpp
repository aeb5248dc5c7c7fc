#pragma once

// Seeded generators for ordinals, worlds, formulas and MNFs. Every generator
// draws only from the Rng it is handed, so runs are reproducible per seed.

#include <cstdint>
#include <random>
#include <string_view>

#include "tsc/formula.hpp"
#include "tsc/frame.hpp"
#include "tsc/normalform.hpp"
#include "tsc/ordinal.hpp"

namespace tsc::gen {

using Rng = std::mt19937_64;

/// Independent stream for instance `index` of the property family `family`.
Rng instance_rng(std::uint64_t seed, std::string_view family, std::uint64_t index);

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);
bool chance(Rng& rng, double p);

struct OrdinalShape {
  std::size_t depth = 2;        // maximum CNF nesting
  std::size_t max_terms = 3;
  Coefficient max_coeff = 5;
};

Ordinal ordinal(Rng& rng, const OrdinalShape& shape);
Ordinal positive_ordinal(Rng& rng, const OrdinalShape& shape);

struct WorldShape {
  std::size_t max_support = 6;
  OrdinalShape factor{3, 3, 5};  // shape of the free factor at each coordinate
};

/// Built top-down: x_i = w^{x_{i+1}} * q_i for random q_i >= 1, which keeps
/// every coordinate's logarithm at least the next coordinate.
World world(Rng& rng, const WorldShape& shape);

struct FormulaShape {
  std::size_t max_modalities = 8;
  Base max_base = 4;
  OrdinalShape exponent{2, 2, 3};
  bool finite_exponents = false;
  Coefficient max_finite = 5;
  double zero_exponent_chance = 0.0;
};

Formula formula(Rng& rng, const FormulaShape& shape);

/// An MNF built from the top monomial down, with every bases >= min_base.
Mnf mnf(Rng& rng, std::size_t max_monomials, Base min_base, Base max_base, const OrdinalShape& shape);

/// A formula the input derives: drops conjuncts, lowers exponents, moves
/// modalities to smaller bases (with the matching hyper-exponential), or
/// weakens bodies.
Formula weaken(Rng& rng, const Formula& f);

/// Same normal form, different syntax: conjunctions are flattened, shuffled
/// and regrouped at random, and <n^0> wrappers are inserted.
Formula scramble(Rng& rng, const Formula& f);

/// A world strictly below x at some coordinate j (y_j < x_j).
World lower(Rng& rng, const World& x);

}  // namespace tsc::gen
