// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "tsc/fuzz.hpp"
#include "tsc/oracle.hpp"
#include "tsc/random.hpp"
#include "tsc/syntax.hpp"

using namespace tsc;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

fuzz::FamilyReport run(const char* name, std::size_t count) {
  fuzz::Options options;
  options.seed = kSeed;
  options.count = count;
  return fuzz::run_family(fuzz::family(name), options);
}

// Every instance ran, none was vacuous, none failed.
Verdict families(const std::vector<const char*>& names, std::size_t count) {
  Verdict v;
  for (const char* name : names) {
    const auto r = run(name, count);
    const bool ok = r.ok() && r.vacuous == 0 && r.passed == count;
    v.detail += std::string(v.detail.empty() ? "" : ", ") + name + " " + std::to_string(r.passed) + "/" +
                std::to_string(count);
    if (r.vacuous) v.detail += " (" + std::to_string(r.vacuous) + " vacuous)";
    if (!r.ok()) v.detail += " [" + r.counterexample + "]";
    v.pass = v.pass && ok;
  }
  return v;
}

Verdict round_trip() { return families({"mnf-round-trip"}, 10000); }

Verdict axioms() {
  return families({"axiom-1-identity", "axiom-2-conjunction", "axiom-3-monotonicity", "axiom-4-coadditivity",
                   "axiom-5-reduction", "axiom-6-schmerl"},
                  1000);
}

Verdict rules() { return families({"rule-1-conjunction", "rule-2-cut", "rule-3-modal", "rule-4-mixed"}, 1000); }

Verdict unique_mnf() { return families({"unique-mnf"}, 2000); }

// All (x, y, n, alpha) with x in a lift-closed pool, y a seed, n <= 3, alpha <= 8.
Verdict relation_oracle() {
  constexpr Coefficient kMaxAlpha = 8;
  constexpr Base kMaxBase = 3;
  std::size_t pairs = 0, positives = 0, disagreements = 0;
  std::string first;
  for (std::uint64_t round = 0; round < 4; ++round) {
    auto rng = gen::instance_rng(kSeed, "acceptance-relations", round);
    std::vector<World> seeds{World{}};
    while (seeds.size() < 3) seeds.push_back(gen::world(rng, {2, {1, 2, 2}}));
    const auto pool = oracle::lift_closed_pool(seeds, kMaxBase, kMaxAlpha);
    oracle::StepUnfolder unfolder(pool, kMaxAlpha);
    for (const auto& x : pool)
      for (const auto& y : seeds)
        for (Base n = 0; n <= kMaxBase; ++n)
          for (Coefficient a = 0; a <= kMaxAlpha; ++a) {
            const bool fast = steps(x, n, Ordinal{a}, y);
            ++pairs;
            positives += fast;
            if (fast != unfolder.holds(x, n, a, y) && disagreements++ == 0)
              first = render(x) + " S_" + std::to_string(n) + "^" + std::to_string(a) + " " + render(y);
          }
  }
  Verdict v;
  v.pass = disagreements == 0 && pairs >= 500 && positives > 0 && positives < pairs;
  v.detail = std::to_string(pairs) + " pairs (" + std::to_string(positives) + " related), " +
             std::to_string(disagreements) + " disagreements";
  if (!first.empty()) v.detail += " [" + first + "]";
  return v;
}

Verdict sat_oracle() {
  constexpr std::size_t kPairs = 1000;
  gen::FormulaShape shape;
  shape.max_modalities = 3;
  shape.max_base = 2;
  shape.finite_exponents = true;
  shape.max_finite = 5;
  shape.zero_exponent_chance = 0.05;
  std::size_t positives = 0, disagreements = 0;
  std::string first;
  for (std::uint64_t i = 0; i < kPairs; ++i) {
    auto rng = gen::instance_rng(kSeed, "acceptance-sat", i);
    const Formula f = gen::formula(rng, shape);
    const World threshold = val(f);
    World x;
    switch (gen::uniform(rng, 0, 2)) {
      case 0: x = gen::world(rng, {3, {1, 2, 3}}); break;
      case 1: x = join(threshold, gen::world(rng, {3, {1, 2, 3}})); break;
      default: x = threshold.is_zero() ? threshold : gen::lower(rng, threshold); break;
    }
    oracle::SearchBudget budget;
    budget.max_alpha = 5;
    budget.candidate_pool = oracle::witness_pool(f);
    const bool fast = sat(x, f);
    positives += fast;
    if (fast != oracle::direct_sat(x, f, budget) && disagreements++ == 0) first = render(x) + " |= " + render(f);
  }
  Verdict v;
  v.pass = disagreements == 0 && positives > 0 && positives < kPairs;
  v.detail = std::to_string(kPairs) + " pairs (" + std::to_string(positives) + " satisfied), " +
             std::to_string(disagreements) + " disagreements";
  if (!first.empty()) v.detail += " [" + first + "]";
  return v;
}

Verdict proof_search() {
  constexpr std::size_t kCorpus = 200;
  gen::FormulaShape shape;
  shape.max_modalities = 3;
  shape.max_base = 2;
  shape.exponent = {1, 2, 2};
  oracle::SearchBudget budget;
  budget.max_depth = 4;
  std::size_t confirmed = 0, unsound = 0;
  std::string first;
  for (std::uint64_t i = 0; i < kCorpus; ++i) {
    auto rng = gen::instance_rng(kSeed, "acceptance-proofs", i);
    const Formula phi = gen::formula(rng, shape);
    const Formula psi = gen::chance(rng, 0.6) ? gen::weaken(rng, phi) : gen::formula(rng, shape);
    const Sequent s{phi, psi};
    if (!oracle::proof_search(s, budget)) continue;
    ++confirmed;
    if (!derives(s) && unsound++ == 0) first = render(s);
  }

  std::size_t mismatches = 0;
  for (const auto& c : corpus::kSequents) {
    if (derives(parse_sequent(c.sequent)) != c.derivable && mismatches++ == 0)
      first += std::string(first.empty() ? "" : "; ") + "corpus: " + c.sequent;
  }
  const bool search_examples = oracle::proof_search(parse_sequent("<0^1><1^1>T |- <0^1><1^1>T"), budget) &&
                               oracle::proof_search(parse_sequent("<1^1>T |- <0^1>T"), budget) &&
                               !oracle::proof_search(parse_sequent("<0^1>T |- <1^1>T"), budget);

  Verdict v;
  v.pass = unsound == 0 && confirmed > 0 && mismatches == 0 && search_examples && corpus::kSequents.size() >= 20;
  v.detail = std::to_string(confirmed) + "/" + std::to_string(kCorpus) + " found, " + std::to_string(unsound) +
             " unsound; curated " + std::to_string(corpus::kSequents.size() - mismatches) + "/" +
             std::to_string(corpus::kSequents.size()) + " verdicts match";
  if (!search_examples) v.detail += "; search examples wrong";
  if (!first.empty()) v.detail += " [" + first + "]";
  return v;
}

Verdict definability() { return families({"definability"}, 500); }
Verdict frame_laws() { return families({"frame-laws"}, 10000); }
Verdict ordinal_algebra() { return families({"ordinal-algebra"}, 10000); }

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> check;
  double limit_seconds;  // 0 for no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "round trip world -> MNF -> world", round_trip, 10},
      {2, "axiom soundness", axioms, 60},
      {3, "rule closure", rules, 0},
      {4, "unique MNF invariance", unique_mnf, 0},
      {5, "oracle agreement: relations", relation_oracle, 0},
      {6, "oracle agreement: satisfaction", sat_oracle, 0},
      {7, "proof search soundness", proof_search, 0},
      {8, "modal definability", definability, 0},
      {9, "frame laws", frame_laws, 0},
      {10, "ordinal algebra", ordinal_algebra, 0},
  };

  const auto suite_start = Clock::now();
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double took = seconds_since(start);
    if (c.limit_seconds > 0 && took >= c.limit_seconds) {
      v.pass = false;
      v.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    all = all && v.pass;
    std::printf("%s  C%-2d %-34s %7.2fs  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, took, v.detail.c_str());
    std::fflush(stdout);
  }
  const double total = seconds_since(suite_start);
  std::printf("%s  total %.2fs (limit 300s)\n", all && total < 300 ? "PASS" : "FAIL", total);
  return all && total < 300 ? 0 : 1;
}
