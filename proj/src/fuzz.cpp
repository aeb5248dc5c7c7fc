#include "tsc/fuzz.hpp"

#include <exception>
#include <stdexcept>

#include "tsc/oracle.hpp"
#include "tsc/syntax.hpp"

namespace tsc::fuzz {

namespace {

using gen::Rng;
using gen::chance;
using gen::uniform;

constexpr int kPremiseAttempts = 24;

std::string show(const Sequent& s) { return render(s); }

Outcome expect_derivable(const Semantics& sem, const Sequent& s, const char* what) {
  if (sem.derives(s)) return Outcome::pass();
  return Outcome::fail(std::string(what) + " not derivable: " + show(s));
}

Outcome expect_equivalent(const Semantics& sem, const Formula& a, const Formula& b, const char* what) {
  if (sem.derives({a, b}) && sem.derives({b, a})) return Outcome::pass();
  return Outcome::fail(std::string(what) + " not an equivalence: " + render(a) + " vs " + render(b));
}

gen::FormulaShape small_formulas() {
  gen::FormulaShape shape;
  shape.max_modalities = 4;
  shape.max_base = 4;
  return shape;
}

// A formula the first argument should derive; mostly weakenings, sometimes
// unrelated (the caller filters on the premise).
Formula candidate_consequence(Rng& rng, const Formula& phi) {
  return chance(rng, 0.7) ? gen::weaken(rng, phi) : gen::formula(rng, small_formulas());
}

Outcome ordinal_algebra(Rng& rng, const Semantics&) {
  const gen::OrdinalShape shape{3, 3, 5};
  const Ordinal a = gen::ordinal(rng, shape);
  const Ordinal b = gen::ordinal(rng, shape);
  const Ordinal c = gen::ordinal(rng, shape);
  auto fail = [&](const char* law) {
    return Outcome::fail(std::string(law) + " fails for a=" + render(a) + " b=" + render(b) + " c=" + render(c));
  };
  if ((a + b) + c != a + (b + c)) return fail("associativity of +");
  if ((a * b) * c != a * (b * c)) return fail("associativity of *");
  if (a * (b + c) != a * b + a * c) return fail("left distributivity");
  if (a + Ordinal{} != a || Ordinal{} + a != a) return fail("additive identity");
  if (a * Ordinal{1} != a || Ordinal{1} * a != a) return fail("multiplicative identity");
  if (compare(a, b) != (0 <=> compare(b, a))) return fail("antisymmetry of compare");
  if (!b.is_zero()) {
    const auto [q, r] = left_divide(a, b);
    if (b * q + r != a || !(r < b)) return fail("division identity");
  }
  if (ell(a + omega_pow(c)) != c) return fail("ell(a + w^c) = c");
  if (!a.is_zero() && hyper_e(a) != omega_pow(a)) return fail("e(a) = w^a");
  const std::size_t n = uniform(rng, 0, 2);
  const std::size_t m = uniform(rng, 0, 2);
  if (hyper_e_n(n + m, a) != hyper_e_n(n, hyper_e_n(m, a))) return fail("e^(n+m) = e^n o e^m");
  const Ordinal floor = gen::ordinal(rng, {1, 2, 3});
  const Ordinal w = round_up_geq(a, floor);
  if (w < a || (!floor.is_zero() && ell(w) < floor)) return fail("round_up_geq postcondition");
  return Outcome::pass();
}

World nearby_above(Rng& rng, const World& below) {
  World out = lift(below, uniform(rng, 0, 3), Ordinal{uniform(rng, 1, 3)});
  if (chance(rng, 0.5)) out = join(out, gen::world(rng, {3, {2, 2, 3}}));
  return out;
}

Outcome frame_laws(Rng& rng, const Semantics&) {
  const gen::WorldShape shape{4, {2, 2, 3}};
  const World z = gen::world(rng, shape);
  const World y = chance(rng, 0.8) ? nearby_above(rng, z) : gen::world(rng, shape);
  const World x = chance(rng, 0.8) ? nearby_above(rng, y) : gen::world(rng, shape);
  const Base n = uniform(rng, 0, 3);
  auto fail = [&](const char* law) {
    return Outcome::fail(std::string(law) + " fails for x=" + render(x) + " y=" + render(y) + " z=" + render(z) +
                         " n=" + std::to_string(n));
  };
  if (step(x, n, x)) return fail("irreflexivity");
  if (step(x, n, y) && step(y, n, z) && !step(x, n, z)) return fail("transitivity");
  if (step(x, n, y)) {
    for (Base m = 0; m < n; ++m)
      if (!step(x, m, y)) return fail("monotonicity in n");
    if (!(x[n] > y[n])) return fail("strict descent at n");
  }
  return Outcome::pass();
}

Outcome mnf_round_trip(Rng& rng, const Semantics&) {
  const World x = gen::world(rng, {});
  const Mnf m = mnf_of_world(x);
  if (world_of_mnf(m) != x) return Outcome::fail("world_of_mnf(mnf_of_world(x)) != x for x=" + render(x));
  if (!is_mnf(m.to_formula())) return Outcome::fail("mnf_of_world produced a non-MNF for x=" + render(x));
  return Outcome::pass();
}

Outcome axiom_identity(Rng& rng, const Semantics& sem) {
  const Formula phi = gen::formula(rng, small_formulas());
  if (auto o = expect_derivable(sem, {phi, phi}, "phi |- phi"); o.status != Outcome::Status::Pass) return o;
  return expect_derivable(sem, {phi, Formula::top()}, "phi |- T");
}

Outcome axiom_conjunction(Rng& rng, const Semantics& sem) {
  const Formula phi = gen::formula(rng, small_formulas());
  const Formula psi = gen::formula(rng, small_formulas());
  const Formula both = Formula::conj(phi, psi);
  if (auto o = expect_derivable(sem, {both, phi}, "conjunction elimination"); o.status != Outcome::Status::Pass)
    return o;
  return expect_derivable(sem, {both, psi}, "conjunction elimination");
}

Outcome axiom_monotonicity(Rng& rng, const Semantics& sem) {
  const Formula phi = gen::formula(rng, small_formulas());
  const Base n = uniform(rng, 0, 4);
  const Ordinal beta = gen::ordinal(rng, {2, 2, 3});
  const Ordinal alpha = beta + gen::positive_ordinal(rng, {2, 2, 3});
  return expect_derivable(sem, {Formula::diam(n, alpha, phi), Formula::diam(n, beta, phi)}, "monotonicity");
}

Outcome axiom_coadditivity(Rng& rng, const Semantics& sem) {
  const Formula phi = gen::formula(rng, small_formulas());
  const Base n = uniform(rng, 0, 4);
  const Ordinal alpha = gen::ordinal(rng, {2, 2, 3});
  const Ordinal beta = gen::ordinal(rng, {2, 2, 3});
  return expect_equivalent(sem, Formula::diam(n, beta + alpha, phi),
                           Formula::diam(n, alpha, Formula::diam(n, beta, phi)), "co-additivity");
}

Outcome axiom_reduction(Rng& rng, const Semantics& sem) {
  const Formula phi = gen::formula(rng, small_formulas());
  const Base n = uniform(rng, 0, 3);
  const Base m = uniform(rng, 0, 3);
  const Ordinal alpha = gen::ordinal(rng, {2, 2, 3});
  return expect_derivable(sem, {Formula::diam(n + m, alpha, phi), Formula::diam(n, hyper_e_n(m, alpha), phi)},
                          "reduction");
}

Outcome axiom_schmerl(Rng& rng, const Semantics& sem) {
  const Base n = uniform(rng, 0, 2);
  const Mnf body = gen::mnf(rng, 3, n + 1, n + 4, {2, 2, 3});
  const Ordinal alpha = gen::ordinal(rng, {2, 2, 3});
  const auto& head = body.monomials().front();
  if (head.base <= n) throw std::logic_error("schmerl instance with n >= n0");
  std::vector<Formula> rhs{Formula::diam(n, hyper_e_n(head.base - n, head.exponent) * (Ordinal{1} + alpha),
                                         Formula::top())};
  for (const auto& part : flatten_conjuncts(body.to_formula())) rhs.push_back(part);
  return expect_equivalent(sem, Formula::diam(n, alpha, body.to_formula()), conjoin(rhs), "Schmerl axiom");
}

Outcome rule_conjunction(Rng& rng, const Semantics& sem) {
  for (int attempt = 0; attempt < kPremiseAttempts; ++attempt) {
    const Formula phi = gen::formula(rng, small_formulas());
    const Formula psi = candidate_consequence(rng, phi);
    const Formula chi = candidate_consequence(rng, phi);
    if (!sem.derives({phi, psi}) || !sem.derives({phi, chi})) continue;
    return expect_derivable(sem, {phi, Formula::conj(psi, chi)}, "rule 1 conclusion");
  }
  return Outcome::vacuous();
}

Outcome rule_cut(Rng& rng, const Semantics& sem) {
  for (int attempt = 0; attempt < kPremiseAttempts; ++attempt) {
    const Formula phi = gen::formula(rng, small_formulas());
    const Formula psi = candidate_consequence(rng, phi);
    const Formula chi = candidate_consequence(rng, psi);
    if (!sem.derives({phi, psi}) || !sem.derives({psi, chi})) continue;
    return expect_derivable(sem, {phi, chi}, "rule 2 conclusion");
  }
  return Outcome::vacuous();
}

Outcome rule_modal(Rng& rng, const Semantics& sem) {
  for (int attempt = 0; attempt < kPremiseAttempts; ++attempt) {
    const Formula phi = gen::formula(rng, small_formulas());
    const Formula psi = candidate_consequence(rng, phi);
    if (!sem.derives({phi, psi})) continue;
    const Base n = uniform(rng, 0, 4);
    const Ordinal alpha = gen::ordinal(rng, {2, 2, 3});
    return expect_derivable(sem, {Formula::diam(n, alpha, phi), Formula::diam(n, alpha, psi)}, "rule 3 conclusion");
  }
  return Outcome::vacuous();
}

Outcome rule_mixed(Rng& rng, const Semantics& sem) {
  for (int attempt = 0; attempt < kPremiseAttempts; ++attempt) {
    const Formula phi = gen::formula(rng, small_formulas());
    const Formula psi = candidate_consequence(rng, phi);
    if (!sem.derives({phi, psi})) continue;
    const Base n = uniform(rng, 1, 4);
    const Base m = uniform(rng, 0, n - 1);
    const Ordinal alpha = gen::ordinal(rng, {2, 2, 3});
    const Ordinal succ = gen::ordinal(rng, {2, 2, 3}) + Ordinal{1};
    const Formula upper = Formula::diam(m, succ, psi);
    const Sequent conclusion{Formula::conj(Formula::diam(n, alpha, phi), upper),
                             Formula::diam(n, alpha, Formula::conj(phi, upper))};
    return expect_derivable(sem, conclusion, "rule 4 conclusion");
  }
  return Outcome::vacuous();
}

Outcome unique_mnf(Rng& rng, const Semantics& sem) {
  gen::FormulaShape shape;
  shape.max_modalities = 8;
  shape.max_base = 4;
  shape.zero_exponent_chance = 0.1;
  const Formula f = gen::formula(rng, shape);
  const Formula g = gen::scramble(rng, f);
  const Mnf nf = sem.normalize(f);
  if (sem.normalize(g) != nf)
    return Outcome::fail("normal form changes under regrouping: " + render(f) + " vs " + render(g));
  if (!is_mnf(nf.to_formula())) return Outcome::fail("normalize produced a non-MNF for " + render(f));
  if (sem.normalize(parse_formula(render(nf))) != nf)
    return Outcome::fail("normalize is not idempotent on " + render(f));
  return Outcome::pass();
}

Outcome relation_oracle(Rng& rng, const Semantics&) {
  const gen::WorldShape shape{2, {1, 2, 2}};
  std::vector<World> seeds{World{}, gen::world(rng, shape), gen::world(rng, shape)};
  const Coefficient max_alpha = 8;
  const auto pool = oracle::lift_closed_pool(seeds, 3, max_alpha);
  oracle::StepUnfolder unfolder(pool, max_alpha);
  for (int pair = 0; pair < 4; ++pair) {
    const World& y = seeds[uniform(rng, 0, seeds.size() - 1)];
    const Base n = uniform(rng, 0, 3);
    const Coefficient alpha = uniform(rng, 0, max_alpha);
    // x near lift(y, n, alpha) about half the time, so both answers occur
    World x;
    switch (uniform(rng, 0, 3)) {
      case 0: x = pool[uniform(rng, 0, pool.size() - 1)]; break;
      case 1: x = lift(y, uniform(rng, 0, 3), Ordinal{uniform(rng, 0, max_alpha)}); break;
      default: x = lift(y, n, Ordinal{uniform(rng, alpha == 0 ? 0 : alpha - 1, max_alpha)}); break;
    }
    const bool fast = steps(x, n, Ordinal{alpha}, y);
    if (fast != unfolder.holds(x, n, alpha, y))
      return Outcome::fail("steps disagrees with the unfolded definition for x=" + render(x) + " n=" +
                           std::to_string(n) + " alpha=" + std::to_string(alpha) + " y=" + render(y));
  }
  return Outcome::pass();
}

Outcome sat_oracle(Rng& rng, const Semantics&) {
  gen::FormulaShape shape;
  shape.max_modalities = 3;
  shape.max_base = 2;
  shape.finite_exponents = true;
  shape.max_finite = 5;
  shape.zero_exponent_chance = 0.05;
  const Formula f = gen::formula(rng, shape);
  const World threshold = val(f);
  World x;
  switch (uniform(rng, 0, 2)) {
    case 0: x = gen::world(rng, {3, {1, 2, 3}}); break;
    case 1: x = join(threshold, gen::world(rng, {3, {1, 2, 3}})); break;
    default: x = threshold.is_zero() ? threshold : gen::lower(rng, threshold); break;
  }
  oracle::SearchBudget budget;
  budget.max_alpha = 5;
  budget.candidate_pool = oracle::witness_pool(f);
  if (sat(x, f) != oracle::direct_sat(x, f, budget))
    return Outcome::fail("sat disagrees with direct evaluation at x=" + render(x) + " for " + render(f));
  return Outcome::pass();
}

Outcome definability(Rng& rng, const Semantics&) {
  World x;
  while (x.is_zero()) x = gen::world(rng, {});
  const Formula defining = mnf_of_world(x).to_formula();
  if (!sat(x, defining)) return Outcome::fail("x does not satisfy M(x) for x=" + render(x));
  for (int k = 0; k < 20; ++k) {
    const World y = gen::lower(rng, x);
    bool below = false;
    for (std::size_t j = 0; j < x.support() && !below; ++j) below = y[j] < x[j];
    if (!below) throw std::logic_error("gen::lower returned a world not below x");
    if (sat(y, defining))
      return Outcome::fail("y=" + render(y) + " satisfies M(x)=" + render(defining) + " for x=" + render(x));
  }
  return Outcome::pass();
}

Outcome proof_search_soundness(Rng& rng, const Semantics& sem) {
  gen::FormulaShape shape;
  shape.max_modalities = 3;
  shape.max_base = 2;
  shape.exponent = {1, 2, 2};
  const Formula phi = gen::formula(rng, shape);
  const Formula psi = chance(rng, 0.6) ? gen::weaken(rng, phi) : gen::formula(rng, shape);
  const Sequent s{phi, psi};
  oracle::SearchBudget budget;
  budget.max_depth = 4;
  if (oracle::proof_search(s, budget) && !sem.derives(s))
    return Outcome::fail("proof search derived an underivable sequent: " + show(s));
  return Outcome::pass();
}

}  // namespace

Semantics corrupted_semantics() {
  Semantics sem;
  sem.lift = [](const World& y, Base n, const Ordinal& alpha) {
    return tsc::lift(y, n, alpha.is_zero() ? alpha : Ordinal{1});
  };
  return sem;
}

const std::vector<Family>& families() {
  static const std::vector<Family> all{
      {"ordinal-algebra", ordinal_algebra},
      {"frame-laws", frame_laws},
      {"mnf-round-trip", mnf_round_trip},
      {"axiom-1-identity", axiom_identity},
      {"axiom-2-conjunction", axiom_conjunction},
      {"axiom-3-monotonicity", axiom_monotonicity},
      {"axiom-4-coadditivity", axiom_coadditivity},
      {"axiom-5-reduction", axiom_reduction},
      {"axiom-6-schmerl", axiom_schmerl},
      {"rule-1-conjunction", rule_conjunction},
      {"rule-2-cut", rule_cut},
      {"rule-3-modal", rule_modal},
      {"rule-4-mixed", rule_mixed},
      {"unique-mnf", unique_mnf},
      {"relation-oracle", relation_oracle},
      {"sat-oracle", sat_oracle},
      {"definability", definability},
      {"proof-search-soundness", proof_search_soundness},
  };
  return all;
}

const Family& family(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw std::out_of_range("unknown property family: " + name);
}

FamilyReport run_family(const Family& family, const Options& options) {
  std::vector<Outcome> outcomes(options.count);
  auto run_one = [&](std::size_t i) {
    auto rng = gen::instance_rng(options.seed, family.name, i);
    try {
      outcomes[i] = family.check(rng, options.semantics);
    } catch (const std::exception& e) {
      outcomes[i] = Outcome::fail(std::string("exception: ") + e.what());
    }
  };

  const auto n = static_cast<std::ptrdiff_t>(options.count);
  if (options.exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  }

  FamilyReport report;
  report.name = family.name;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    switch (outcomes[i].status) {
      case Outcome::Status::Pass: ++report.passed; break;
      case Outcome::Status::Vacuous: ++report.vacuous; break;
      case Outcome::Status::Fail:
        if (!report.first_failure) {
          report.first_failure = i;
          report.counterexample = outcomes[i].detail;
        }
        ++report.failed;
        break;
    }
  }
  return report;
}

std::vector<FamilyReport> run_all(const Options& options) {
  std::vector<FamilyReport> out;
  for (const auto& f : families()) out.push_back(run_family(f, options));
  return out;
}

}  // namespace tsc::fuzz
