#pragma once

// Randomized property families: ordinal algebra, frame laws, axiom soundness,
// rule closure, normal-form uniqueness, oracle agreement and definability.
//
// Instance i of a family draws from gen::instance_rng(seed, family, i), so
// serial and parallel runs give identical reports.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsc/normalform.hpp"
#include "tsc/parallel.hpp"
#include "tsc/random.hpp"

namespace tsc::fuzz {

/// The decision procedure with a pluggable lift, so the suites can be
/// pointed at a deliberately broken frame.
struct Semantics {
  LiftFn lift = [](const World& y, Base n, const Ordinal& a) { return tsc::lift(y, n, a); };

  World val(const Formula& f) const { return val_with(f, lift); }
  bool derives(const Sequent& s) const { return pointwise_geq(val(s.lhs), val(s.rhs)); }
  bool equiv(const Formula& a, const Formula& b) const { return val(a) == val(b); }
  Mnf normalize(const Formula& f) const { return mnf_of_world(val(f)); }
};

/// lift with the exponent ignored; every suite that depends on it should fail.
Semantics corrupted_semantics();

struct Outcome {
  enum class Status { Pass, Fail, Vacuous };
  Status status = Status::Pass;
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string detail) { return {Status::Fail, std::move(detail)}; }
  static Outcome vacuous() { return {Status::Vacuous, {}}; }
};

using Check = std::function<Outcome(gen::Rng&, const Semantics&)>;

struct Family {
  std::string name;
  Check check;
};

struct Options {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  Execution exec = Execution::Parallel;
  Semantics semantics;
};

struct FamilyReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;  // premises never held, nothing was checked
  std::optional<std::size_t> first_failure;
  std::string counterexample;

  bool ok() const { return failed == 0; }
};

const std::vector<Family>& families();
const Family& family(const std::string& name);

FamilyReport run_family(const Family& family, const Options& options);
std::vector<FamilyReport> run_all(const Options& options);

}  // namespace tsc::fuzz
