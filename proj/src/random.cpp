#include "tsc/random.hpp"

#include <algorithm>

namespace tsc::gen {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Ordinal lower_positive(Rng& rng, const Ordinal& a) {
  if (a.is_zero()) return a;
  auto terms = a.terms();
  switch (uniform(rng, 0, 3)) {
    case 0: return a;
    case 1:
      if (terms.back().coeff > 1) {
        terms.back().coeff -= uniform(rng, 1, terms.back().coeff - 1);
        return Ordinal::from_terms(std::move(terms));
      }
      [[fallthrough]];
    case 2:
      if (terms.size() > 1) {
        terms.pop_back();
        return Ordinal::from_terms(std::move(terms));
      }
      [[fallthrough]];
    default: {
      if (a.is_finite()) return Ordinal{uniform(rng, 1, a.as_natural())};
      // any natural sits below an infinite ordinal
      return Ordinal{uniform(rng, 1, 5)};
    }
  }
}

Formula build_tree(Rng& rng, const std::vector<Formula>& parts, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const std::size_t mid = uniform(rng, lo + 1, hi - 1);
  return Formula::conj(build_tree(rng, parts, lo, mid), build_tree(rng, parts, mid, hi));
}

Formula build_formula(Rng& rng, const FormulaShape& shape, std::size_t budget) {
  if (budget == 0) return chance(rng, 0.1) ? Formula::conj(Formula::top(), Formula::top()) : Formula::top();
  if (budget >= 2 && chance(rng, 0.35)) {
    const std::size_t left = uniform(rng, 1, budget - 1);
    return Formula::conj(build_formula(rng, shape, left), build_formula(rng, shape, budget - left));
  }
  const Base base = uniform(rng, 0, shape.max_base);
  Ordinal exponent;
  if (!chance(rng, shape.zero_exponent_chance)) {
    exponent = shape.finite_exponents ? Ordinal{uniform(rng, 1, shape.max_finite)}
                                      : positive_ordinal(rng, shape.exponent);
  }
  return Formula::diam(base, std::move(exponent), build_formula(rng, shape, budget - 1));
}

}  // namespace

Rng instance_rng(std::uint64_t seed, std::string_view family, std::uint64_t index) {
  const std::uint64_t fam = fnv1a(family);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fam), static_cast<std::uint32_t>(fam >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Ordinal ordinal(Rng& rng, const OrdinalShape& shape) {
  if (shape.depth == 0) return Ordinal{uniform(rng, 0, shape.max_coeff)};
  const std::size_t count = uniform(rng, 0, shape.max_terms);
  OrdinalShape inner = shape;
  inner.depth = uniform(rng, 0, shape.depth - 1);
  std::vector<Ordinal> exponents;
  for (std::size_t i = 0; i < count; ++i) exponents.push_back(ordinal(rng, inner));
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<Ordinal::Term> terms;
  for (auto& e : exponents) terms.push_back({std::move(e), uniform(rng, 1, shape.max_coeff)});
  return Ordinal::from_terms(std::move(terms));
}

Ordinal positive_ordinal(Rng& rng, const OrdinalShape& shape) {
  Ordinal out = ordinal(rng, shape);
  return out.is_zero() ? Ordinal{uniform(rng, 1, std::max<Coefficient>(1, shape.max_coeff))} : out;
}

World world(Rng& rng, const WorldShape& shape) {
  const std::size_t support = uniform(rng, 0, shape.max_support);
  std::vector<Ordinal> coords(support);
  for (std::size_t i = support; i-- > 0;) {
    if (i + 1 == support) {
      coords[i] = positive_ordinal(rng, shape.factor);
    } else {
      const Ordinal factor = chance(rng, 1.0 / 3) ? Ordinal{1} : positive_ordinal(rng, shape.factor);
      coords[i] = omega_pow(coords[i + 1]) * factor;
    }
  }
  return World::check(std::move(coords));
}

Formula formula(Rng& rng, const FormulaShape& shape) {
  return build_formula(rng, shape, uniform(rng, 0, shape.max_modalities));
}

Mnf mnf(Rng& rng, std::size_t max_monomials, Base min_base, Base max_base, const OrdinalShape& shape) {
  std::vector<Base> bases;
  for (Base b = min_base; b <= max_base; ++b) bases.push_back(b);
  std::shuffle(bases.begin(), bases.end(), rng);
  bases.resize(std::min<std::size_t>(bases.size(), uniform(rng, 1, std::max<std::size_t>(1, max_monomials))));
  std::sort(bases.begin(), bases.end());

  std::vector<Monomial> monos(bases.size());
  for (std::size_t i = bases.size(); i-- > 0;) {
    monos[i].base = bases[i];
    if (i + 1 == bases.size()) {
      monos[i].exponent = positive_ordinal(rng, shape);
    } else {
      OrdinalShape small{1, 2, 3};
      const Ordinal unit = hyper_e_n(bases[i + 1] - bases[i], monos[i + 1].exponent);
      monos[i].exponent = unit * (Ordinal{2} + ordinal(rng, small));
    }
  }
  return Mnf::from_monomials(std::move(monos));
}

Formula weaken(Rng& rng, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top: return f;
    case Formula::Kind::Conj:
      switch (uniform(rng, 0, 5)) {
        case 0: return weaken(rng, f.left());
        case 1: return weaken(rng, f.right());
        case 2: return Formula::top();
        default: return Formula::conj(weaken(rng, f.left()), weaken(rng, f.right()));
      }
    case Formula::Kind::Diam: break;
  }
  const Base n = f.base();
  switch (uniform(rng, 0, 6)) {
    case 0: return Formula::top();
    case 1:
      if (n > 0) {
        const Base m = uniform(rng, 0, n - 1);
        return Formula::diam(m, hyper_e_n(n - m, f.exponent()), weaken(rng, f.body()));
      }
      [[fallthrough]];
    case 2:
    case 3: return Formula::diam(n, lower_positive(rng, f.exponent()), weaken(rng, f.body()));
    default: return Formula::diam(n, f.exponent(), weaken(rng, f.body()));
  }
}

Formula scramble(Rng& rng, const Formula& f) {
  Formula out;
  switch (f.kind()) {
    case Formula::Kind::Top: out = f; break;
    case Formula::Kind::Diam: out = Formula::diam(f.base(), f.exponent(), scramble(rng, f.body())); break;
    case Formula::Kind::Conj: {
      auto parts = flatten_conjuncts(f);
      for (auto& p : parts) p = scramble(rng, p);
      if (chance(rng, 0.2)) parts.push_back(Formula::top());
      std::shuffle(parts.begin(), parts.end(), rng);
      out = build_tree(rng, parts, 0, parts.size());
      break;
    }
  }
  if (chance(rng, 0.25)) out = Formula::diam(uniform(rng, 0, 4), Ordinal{}, out);
  return out;
}

World lower(Rng& rng, const World& x) {
  if (x.is_zero()) throw std::invalid_argument("lower: no world lies below the zero world");

  if (chance(rng, 1.0 / 3)) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      World y = world(rng, {4, {2, 2, 4}});
      for (std::size_t j = 0; j < x.support(); ++j)
        if (y[j] < x[j]) return y;
    }
  }

  const std::size_t j = uniform(rng, 0, x.support() - 1);
  std::vector<Ordinal> coords(x.coords().begin(), x.coords().end());
  auto terms = coords[j].terms();
  const auto choice = uniform(rng, 0, 2);
  if (choice == 0 && terms.back().coeff > 1) {
    terms.back().coeff -= 1;
    coords[j] = Ordinal::from_terms(std::move(terms));
  } else if (choice <= 1 && terms.size() > 1) {
    // dropping the last term raises the logarithm, so the tail above stays valid
    terms.pop_back();
    coords[j] = Ordinal::from_terms(std::move(terms));
  } else {
    coords.resize(j);
  }

  // Optionally push the coordinates below j up again.
  coords.resize(std::max(coords.size(), j));
  for (std::size_t i = j; i-- > 0;) {
    const Ordinal& above = i + 1 < coords.size() ? coords[i + 1] : kZeroOrdinal;
    if (chance(rng, 0.5)) coords[i] = coords[i] + omega_pow(above) * Ordinal{uniform(rng, 1, 3)};
    coords[i] = round_up_geq(coords[i], above);
  }
  return World::check(std::move(coords));
}

}  // namespace tsc::gen
