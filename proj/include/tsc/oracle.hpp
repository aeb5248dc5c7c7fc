#pragma once

// Slow, definition-level procedures used to cross-check the frame and the
// decision procedure. None of these are used by the library itself.
//
// Existential witnesses are searched for in a finite candidate pool. The
// answers are exact when the pool contains every world the definitions
// quantify over in a successful run; lift_closed_pool and witness_pool build
// such pools.

#include <map>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/frame.hpp"

namespace tsc::oracle {

class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  std::size_t max_depth = 4;    // rule-application rounds in proof_search
  Coefficient max_alpha = 8;    // largest finite exponent unfolded
  std::vector<World> candidate_pool;
  std::size_t max_universe = 256;  // formulas considered by proof_search
};

/// Evaluates x S_n^alpha y straight from the recursive definition
///   x S_n^0 y      iff x = y
///   x S_n^{1+a} y  iff for all b < 1+a there is z with x S_n z and z S_n^b y
/// with z ranging over the pool. Memoizes across calls.
class StepUnfolder {
public:
  explicit StepUnfolder(std::vector<World> pool, Coefficient max_alpha = 8);

  bool holds(const World& x, Base n, Coefficient alpha, const World& y);

  std::size_t pool_size() const { return pool_.size(); }

private:
  std::size_t index_of(const World& w);
  bool holds_at(std::size_t x, Base n, Coefficient alpha, std::size_t y);
  bool edge(Base n, std::size_t x, std::size_t z);

  std::vector<World> pool_;
  std::map<World, std::size_t> index_;
  Coefficient max_alpha_;
  // rows_[{n, x}][z] caches step(pool[x], n, pool[z]); extended when the pool grows
  std::map<std::pair<Base, std::size_t>, std::vector<char>> rows_;
  std::map<std::tuple<std::size_t, Base, Coefficient, std::size_t>, bool> memo_;
};

bool unfold_steps(const World& x, Base n, Coefficient alpha, const World& y, const SearchBudget& budget);

/// Evaluates x |= f from the Kripke clauses, searching witnesses in the pool.
/// Every exponent in f must be a natural <= budget.max_alpha.
bool direct_sat(const World& x, const Formula& f, const SearchBudget& budget);

/// Forward chaining over the axioms and rules restricted to a finite universe
/// of formulas grown from the subformulas of s. True means a derivation with at
/// most max_depth rule rounds was found; false only means none was found.
bool proof_search(const Sequent& s, const SearchBudget& budget);

/// seeds together with lift(seed, n, k) for every n <= max_base, 1 <= k <= max_alpha.
std::vector<World> lift_closed_pool(std::span<const World> seeds, Base max_base, Coefficient max_alpha);

/// Worlds reached by building f bottom-up with lift (every exponent <= the
/// modality's) and join. Exponents of f must be finite.
std::vector<World> witness_pool(const Formula& f);

}  // namespace tsc::oracle
