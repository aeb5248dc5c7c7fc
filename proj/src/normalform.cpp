#include "tsc/normalform.hpp"

#include <stdexcept>

namespace tsc {

bool mnf_link_ok(const Monomial& lower, const Monomial& upper) {
  if (lower.base >= upper.base) return false;
  const Ordinal unit = hyper_e_n(upper.base - lower.base, upper.exponent);
  if (unit.is_zero()) return false;
  const auto [quotient, remainder] = left_divide(lower.exponent, unit);
  return remainder.is_zero() && quotient >= Ordinal{2};
}

Mnf Mnf::from_monomials(std::vector<Monomial> monomials) {
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (monomials[i].exponent.is_zero()) throw std::invalid_argument("MNF monomial with exponent 0");
    if (i + 1 < monomials.size() && !mnf_link_ok(monomials[i], monomials[i + 1]))
      throw std::invalid_argument("MNF side condition fails between bases " + std::to_string(monomials[i].base) +
                                  " and " + std::to_string(monomials[i + 1].base));
  }
  Mnf out;
  out.monomials_ = std::move(monomials);
  return out;
}

Formula Mnf::to_formula() const {
  std::vector<Formula> parts;
  parts.reserve(monomials_.size());
  for (const auto& m : monomials_) parts.push_back(Formula::diam(m.base, m.exponent, Formula::top()));
  return conjoin(parts);
}

std::optional<std::vector<Monomial>> as_monomials(const Formula& f) {
  if (f.is_top()) return std::vector<Monomial>{};
  std::vector<Monomial> out;
  for (const auto& part : flatten_conjuncts(f)) {
    if (!part.is_diam() || !part.body().is_top()) return std::nullopt;
    out.push_back({part.base(), part.exponent()});
  }
  return out;
}

bool is_mnf(const Formula& f) {
  auto monomials = as_monomials(f);
  if (!monomials) return false;
  try {
    Mnf::from_monomials(std::move(*monomials));
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Ordinal project(const Mnf& m, Base n) {
  const auto& monos = m.monomials();
  if (monos.empty() || n > monos.back().base) return Ordinal{};
  // The first monomial at or above n determines the value.
  for (const auto& mono : monos) {
    if (mono.base >= n) return hyper_e_n(mono.base - n, mono.exponent);
  }
  return Ordinal{};
}

World world_of_mnf(const Mnf& m) {
  if (m.is_top()) return World{};
  const Base top = m.monomials().back().base;
  std::vector<Ordinal> coords(top + 1);
  for (Base i = 0; i <= top; ++i) coords[i] = project(m, i);
  return World::check(std::move(coords));
}

Mnf mnf_of_world(const World& x) {
  std::vector<Monomial> monos;
  for (std::size_t i = 0; i < x.support(); ++i) {
    if (x[i] > hyper_e(x[i + 1])) monos.push_back({i, x[i]});
  }
  return Mnf::from_monomials(std::move(monos));
}

World val_with(const Formula& f, const LiftFn& lift_fn) {
  switch (f.kind()) {
    case Formula::Kind::Top: return World{};
    case Formula::Kind::Conj: return join(val_with(f.left(), lift_fn), val_with(f.right(), lift_fn));
    case Formula::Kind::Diam: return lift_fn(val_with(f.body(), lift_fn), f.base(), f.exponent());
  }
  return World{};
}

World val(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top: return World{};
    case Formula::Kind::Conj: return join(val(f.left()), val(f.right()));
    case Formula::Kind::Diam: return lift(val(f.body()), f.base(), f.exponent());
  }
  return World{};
}

Mnf normalize(const Formula& f) { return mnf_of_world(val(f)); }

bool derives(const Sequent& s) { return pointwise_geq(val(s.lhs), val(s.rhs)); }

bool equiv(const Formula& a, const Formula& b) { return val(a) == val(b); }

}  // namespace tsc
