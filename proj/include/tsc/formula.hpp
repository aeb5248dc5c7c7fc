#pragma once

#include <cstddef>
#include <memory>
#include <set>

#include "tsc/ordinal.hpp"

namespace tsc {

using Base = std::size_t;

/// Strictly positive modal formula: T, conjunction, or a modality <n^alpha>phi.
/// Immutable; copies share structure.
class Formula {
public:
  enum class Kind { Top, Conj, Diam };

  /// Defaults to T.
  Formula();

  static Formula top() { return Formula{}; }
  static Formula conj(Formula left, Formula right);
  static Formula diam(Base base, Ordinal exponent, Formula body);

  Kind kind() const;
  bool is_top() const { return kind() == Kind::Top; }
  bool is_conj() const { return kind() == Kind::Conj; }
  bool is_diam() const { return kind() == Kind::Diam; }

  // Conj accessors.
  const Formula& left() const;
  const Formula& right() const;

  // Diam accessors.
  Base base() const;
  const Ordinal& exponent() const;
  const Formula& body() const;

  /// Number of modalities.
  std::size_t modal_count() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Sequent {
  Formula lhs;
  Formula rhs;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// The set of bases occurring in modalities of f.
std::set<Base> n_mod(const Formula& f);

/// Left-associated conjunction of the given formulas; T when empty.
Formula conjoin(const std::vector<Formula>& parts);

/// Conjuncts of f with every nested conjunction flattened, left to right.
std::vector<Formula> flatten_conjuncts(const Formula& f);

}  // namespace tsc
