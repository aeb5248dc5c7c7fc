#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An ordinal is a finite sum  w^a1*c1 + w^a2*c2 + ... + w^ak*ck  with
// a1 > a2 > ... > ak (themselves ordinals) and every ci >= 1. The empty sum
// is 0. The representation is canonical, so structural equality is ordinal
// equality.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsc {

using Coefficient = std::uint64_t;

/// Thrown when a coefficient would exceed 64 bits.
class OrdinalOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

class Ordinal {
public:
  struct Term;

  Ordinal() = default;
  explicit Ordinal(Coefficient n);

  /// Builds an ordinal from terms; throws std::invalid_argument unless the
  /// exponents strictly descend and every coefficient is positive.
  static Ordinal from_terms(std::vector<Term> terms);
  static Ordinal omega();

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// True for alpha + 1 shapes, i.e. the last term has exponent 0.
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }

  /// The value as a machine natural; throws std::domain_error if infinite.
  Coefficient as_natural() const;

  /// Leading exponent; 0 for the zero ordinal.
  const Ordinal& leading_exponent() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Coefficient coeff = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

inline const Ordinal kZeroOrdinal{};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinal addition (non-commutative).
Ordinal add(const Ordinal& a, const Ordinal& b);
/// Ordinal multiplication (non-commutative, left-distributive).
Ordinal mul(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

/// w^a. Note omega_pow(0) == 1.
Ordinal omega_pow(const Ordinal& a);

/// The hyper-exponential e(a) = -1 + w^a, so e(0) == 0 and e(a) == w^a otherwise.
Ordinal hyper_e(const Ordinal& a);

/// n-fold composition of hyper_e; hyper_e_n(0, a) == a.
Ordinal hyper_e_n(std::size_t n, const Ordinal& a);

/// Ordinal logarithm: ell(0) == 0 and ell(a + w^b) == b.
const Ordinal& ell(const Ordinal& a);

struct Division {
  Ordinal quotient;
  Ordinal remainder;

  friend bool operator==(const Division&, const Division&) = default;
};

/// Unique (q, r) with a == b*q + r and r < b. Throws std::domain_error for b == 0.
Division left_divide(const Ordinal& a, const Ordinal& b);

/// Least w >= z with ell(w) >= floor.
Ordinal round_up_geq(const Ordinal& z, const Ordinal& floor);

/// Nesting depth of exponents: 0 for naturals, 1 for polynomials in w, ...
std::size_t cnf_depth(const Ordinal& a);

}  // namespace tsc
