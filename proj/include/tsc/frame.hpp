#pragma once

// The finitely supported universal frame H.
//
// Worlds are l-sequences <x0, x1, ...> of ordinals below epsilon_0 with
// x_{i+1} <= ell(x_i) and finitely many non-zero entries. x S_n y holds when
// x is strictly above y at every coordinate m <= n and weakly above it at
// every coordinate i > n.

#include <span>
#include <stdexcept>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/ordinal.hpp"

namespace tsc {

/// Reported when a coordinate sequence breaks x_{i+1} <= ell(x_i).
class WorldError : public std::invalid_argument {
public:
  WorldError(std::size_t index, const std::string& what) : std::invalid_argument(what), index_(index) {}
  /// The first index i for which x_{i+1} <= ell(x_i) fails.
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

class World {
public:
  /// The all-zero world.
  World() = default;

  /// Validates and canonicalizes (trailing zeros trimmed). Throws WorldError.
  static World check(std::vector<Ordinal> coords);

  /// Coordinate i; zero beyond the support.
  const Ordinal& operator[](std::size_t i) const { return i < coords_.size() ? coords_[i] : kZeroOrdinal; }

  /// Number of stored coordinates; every coordinate at or past this index is 0.
  std::size_t support() const { return coords_.size(); }
  std::span<const Ordinal> coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  friend bool operator==(const World&, const World&) = default;
  /// Lexicographic order on coordinates; used only for containers.
  friend bool operator<(const World& a, const World& b);

private:
  explicit World(std::vector<Ordinal> coords) : coords_(std::move(coords)) {}
  std::vector<Ordinal> coords_;
};

inline World check_world(std::vector<Ordinal> coords) { return World::check(std::move(coords)); }

/// x_i >= y_i at every coordinate.
bool pointwise_geq(const World& x, const World& y);

/// The relation S_n.
bool step(const World& x, Base n, const World& y);

/// The pointwise-least x with x S_n^alpha y.
World lift(const World& y, Base n, const Ordinal& alpha);

/// The relation S_n^alpha.
bool steps(const World& x, Base n, const Ordinal& alpha, const World& y);

/// Pointwise-least world above both arguments.
World join(const World& x, const World& y);

/// Truth of f at x in H.
bool sat(const World& x, const Formula& f);

}  // namespace tsc
