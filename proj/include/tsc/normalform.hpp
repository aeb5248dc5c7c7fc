#pragma once

// Monomial normal forms and the sequent decision procedure.
//
// Every formula has a characteristic world val(f): the pointwise-least world
// of H at which f holds. A world satisfies f exactly when it lies above
// val(f), phi |- psi is derivable exactly when val(phi) >= val(psi), and the
// normal form of f is read back from val(f).

#include <functional>
#include <optional>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/frame.hpp"
#include "tsc/ordinal.hpp"

namespace tsc {

struct Monomial {
  Base base = 0;
  Ordinal exponent;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A conjunction of monomials <n^a>T with strictly increasing bases,
/// positive exponents, and each exponent a left multiple (by at least 2) of
/// e^{n0-n} applied to the next exponent. Empty means T.
class Mnf {
public:
  Mnf() = default;

  /// Throws std::invalid_argument when the monomials violate the invariants.
  static Mnf from_monomials(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_top() const { return monomials_.empty(); }

  /// Left-associated conjunction of the monomials.
  Formula to_formula() const;

  friend bool operator==(const Mnf&, const Mnf&) = default;

private:
  std::vector<Monomial> monomials_;
};

/// The side condition between adjacent monomials (n, a) and (n0, a0), n < n0.
bool mnf_link_ok(const Monomial& lower, const Monomial& upper);

/// Reads f as a monomial list if it is T or a conjunction of monomials.
std::optional<std::vector<Monomial>> as_monomials(const Formula& f);

bool is_mnf(const Formula& f);

/// The projection pi_n.
Ordinal project(const Mnf& m, Base n);

/// The world <pi_0(m), pi_1(m), ...>.
World world_of_mnf(const Mnf& m);

/// The unique MNF whose world is x.
Mnf mnf_of_world(const World& x);

using LiftFn = std::function<World(const World&, Base, const Ordinal&)>;

/// Characteristic world of f.
World val(const Formula& f);
/// val with a substitute lift; used to mutation-test the property suites.
World val_with(const Formula& f, const LiftFn& lift_fn);

Mnf normalize(const Formula& f);

bool derives(const Sequent& s);
bool equiv(const Formula& a, const Formula& b);

}  // namespace tsc
