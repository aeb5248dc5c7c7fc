#include "tsc/ordinal.hpp"

#include <algorithm>

namespace tsc {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw OrdinalOverflow("ordinal coefficient overflow in addition");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw OrdinalOverflow("ordinal coefficient overflow in multiplication");
  return out;
}

// The unique d with a + d == b. Requires a <= b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t i = 0;
  while (i < at.size() && i < bt.size() && at[i] == bt[i]) ++i;
  if (i == bt.size()) return Ordinal{};

  std::vector<Ordinal::Term> rest;
  if (i < at.size() && at[i].exponent == bt[i].exponent) {
    // same power, b has the larger coefficient
    rest.push_back({bt[i].exponent, bt[i].coeff - at[i].coeff});
    ++i;
  }
  rest.insert(rest.end(), bt.begin() + static_cast<std::ptrdiff_t>(i), bt.end());
  return Ordinal::from_terms(std::move(rest));
}

}  // namespace

Ordinal::Ordinal(Coefficient n) {
  if (n != 0) terms_.push_back({Ordinal{}, n});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) throw std::invalid_argument("ordinal term with zero coefficient");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("ordinal exponents must strictly descend");
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal{1}); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

Coefficient Ordinal::as_natural() const {
  if (!is_finite()) throw std::domain_error("ordinal is not a natural number");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

const Ordinal& Ordinal::leading_exponent() const {
  return terms_.empty() ? kZeroOrdinal : terms_.front().exponent;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const std::size_t n = std::min(at.size(), bt.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(at[i].exponent, bt[i].exponent); c != 0) return c;
    if (auto c = at[i].coeff <=> bt[i].coeff; c != 0) return c;
  }
  return at.size() <=> bt.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      if (t.exponent == lead) {
        out.push_back({lead, checked_add(t.coeff, b.terms().front().coeff)});
        out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
        return Ordinal::from_terms(std::move(out));
      }
      break;
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const auto& head = a.terms().front();
  Ordinal result;
  // a * (w^e1*k1 + ... ) = a*w^e1*k1 + ...
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      std::vector<Ordinal::Term> terms = a.terms();
      terms.front().coeff = checked_mul(head.coeff, t.coeff);
      piece = Ordinal::from_terms(std::move(terms));
    } else {
      piece = Ordinal::from_terms({{add(head.exponent, t.exponent), t.coeff}});
    }
    result = add(result, piece);
  }
  return result;
}

Ordinal omega_pow(const Ordinal& a) { return Ordinal::from_terms({{a, 1}}); }

Ordinal hyper_e(const Ordinal& a) { return a.is_zero() ? Ordinal{} : omega_pow(a); }

Ordinal hyper_e_n(std::size_t n, const Ordinal& a) {
  Ordinal out = a;
  for (std::size_t i = 0; i < n && !out.is_zero(); ++i) out = omega_pow(out);
  return out;
}

const Ordinal& ell(const Ordinal& a) { return a.is_zero() ? kZeroOrdinal : a.terms().back().exponent; }

Division left_divide(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) throw std::domain_error("left_divide: division by zero");
  const auto& b_head = b.terms().front();
  const Ordinal& b_lead = b_head.exponent;

  // Terms of a above b's leading power are b * w^gamma * k with b_lead + gamma = exponent.
  std::vector<Ordinal::Term> quotient;
  std::vector<Ordinal::Term> low;
  for (const auto& t : a.terms()) {
    if (t.exponent > b_lead) {
      quotient.push_back({left_subtract(b_lead, t.exponent), t.coeff});
    } else {
      low.push_back(t);
    }
  }
  Ordinal rest = Ordinal::from_terms(std::move(low));
  Ordinal q_high = Ordinal::from_terms(std::move(quotient));

  if (rest < b) return {q_high, rest};

  // rest = w^b_lead * k + ..., pick the largest n with b*n <= rest
  Coefficient n = rest.terms().front().coeff / b_head.coeff;
  Ordinal bn = mul(b, Ordinal{n});
  if (bn > rest) {
    --n;
    bn = mul(b, Ordinal{n});
  }
  return {add(q_high, Ordinal{n}), left_subtract(bn, rest)};
}

Ordinal round_up_geq(const Ordinal& z, const Ordinal& floor) {
  if (floor.is_zero() || (!z.is_zero() && ell(z) >= floor)) return z;
  std::vector<Ordinal::Term> prefix;
  for (const auto& t : z.terms()) {
    if (t.exponent < floor) break;
    prefix.push_back(t);
  }
  return add(Ordinal::from_terms(std::move(prefix)), omega_pow(floor));
}

std::size_t cnf_depth(const Ordinal& a) {
  std::size_t depth = 0;
  for (const auto& t : a.terms())
    if (!t.exponent.is_zero()) depth = std::max(depth, 1 + cnf_depth(t.exponent));
  return depth;
}

}  // namespace tsc
