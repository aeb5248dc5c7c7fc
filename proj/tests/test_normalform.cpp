#include <doctest.h>

#include "corpus.hpp"
#include "tsc/fuzz.hpp"
#include "tsc/normalform.hpp"
#include "tsc/syntax.hpp"

using namespace tsc;

namespace {

Formula F(const char* text) { return parse_formula(text); }
World W(const char* text) { return parse_world(text); }
Ordinal O(const char* text) { return parse_ordinal(text); }

}  // namespace

TEST_CASE("is_mnf") {
  CHECK(is_mnf(F("T")));
  CHECK(is_mnf(F("<0^w*2>T & <1^1>T")));
  CHECK(is_mnf(F("<2^1>T")));
  CHECK(is_mnf(F("<1^w*2>T & <2^1>T")));
  CHECK(is_mnf(F("<0^w^w*2>T & <2^1>T")));
  CHECK_FALSE(is_mnf(F("<0^w>T & <1^1>T")));     // quotient 1
  CHECK_FALSE(is_mnf(F("<0^w+1>T & <1^1>T")));   // remainder
  CHECK_FALSE(is_mnf(F("<1^1>T & <0^w*2>T")));   // bases out of order
  CHECK_FALSE(is_mnf(F("<0^0>T")));
  CHECK_FALSE(is_mnf(F("<0^1><1^1>T")));
  CHECK_FALSE(is_mnf(F("<0^1>T & T")));
  CHECK_FALSE(is_mnf(F("<0^w>T & <2^1>T")));     // needs a multiple of w^w
  CHECK_THROWS_AS(Mnf::from_monomials({{1, O("1")}, {0, O("w*2")}}), std::invalid_argument);
}

TEST_CASE("projection and worlds of MNFs") {
  const Mnf m = Mnf::from_monomials({{0, O("w*2")}, {1, O("1")}});
  CHECK(project(m, 0) == O("w*2"));
  CHECK(project(m, 1) == O("1"));
  CHECK(project(m, 2) == Ordinal{});
  CHECK(world_of_mnf(m) == W("[w*2, 1]"));

  const Mnf top = Mnf::from_monomials({{2, O("1")}});
  CHECK(world_of_mnf(top) == W("[w^w, w, 1]"));
  CHECK(world_of_mnf(Mnf{}) == W("[]"));

  CHECK(mnf_of_world(W("[w*2, 1]")) == m);
  CHECK(mnf_of_world(W("[w^w, w, 1]")) == top);
  CHECK(render(mnf_of_world(W("[w^(w*2), w*2, 1]"))) == "<1^w*2>T & <2^1>T");
  CHECK(render(mnf_of_world(W("[w^2, 1]"))) == "<0^w^2>T & <1^1>T");
  CHECK(render(mnf_of_world(W("[5]"))) == "<0^5>T");
  CHECK(mnf_of_world(W("[]")).is_top());
}

TEST_CASE("val") {
  CHECK(val(F("T")) == W("[]"));
  CHECK(val(F("<0^1><1^1>T")) == W("[w*2, 1]"));
  CHECK(val(F("<2^1>T")) == W("[w^w, w, 1]"));
  CHECK(val(F("<1^2>T")) == W("[w^2, 2]"));
  CHECK(val(F("<1^w>T")) == W("[w^w, w]"));
  CHECK(val(F("<1^1><1^w>T")) == W("[w^(w+1), w+1]"));
  CHECK(val(F("<1^w><1^1>T")) == W("[w^w, w]"));
  CHECK(val(F("<0^5>T & <1^1>T")) == W("[w, 1]"));
  CHECK(val(F("<3^0>T")) == W("[]"));
}

TEST_CASE("normalize") {
  CHECK(render(normalize(F("<0^1><1^1>T"))) == "<0^w*2>T & <1^1>T");
  CHECK(render(normalize(F("<2^1>T"))) == "<2^1>T");
  CHECK(render(normalize(F("<0^w>T & <1^1>T"))) == "<1^1>T");
  CHECK(render(normalize(F("<1^1><2^1>T"))) == "<1^w*2>T & <2^1>T");
  CHECK(render(normalize(F("<0^1><2^1>T"))) == "<0^w^w*2>T & <2^1>T");
  CHECK(render(normalize(F("<0^0>T & T"))) == "T");
}

TEST_CASE("derives on the curated corpus") {
  for (const auto& c : corpus::kSequents) {
    CAPTURE(c.sequent);
    CHECK(derives(parse_sequent(c.sequent)) == c.derivable);
  }
}

TEST_CASE("equiv") {
  CHECK(equiv(F("<0^1><1^1>T"), F("<0^w*2>T & <1^1>T")));
  CHECK(equiv(F("<0^2>T"), F("<0^1><0^1>T")));
  CHECK(equiv(F("<1^1>T & <0^1>T"), F("<0^1>T & <1^1>T")));
  CHECK_FALSE(equiv(F("<0^w>T"), F("<1^1>T")));
}

TEST_CASE("the MNF of a formula is an MNF and defines the same world") {
  gen::FormulaShape shape;
  shape.zero_exponent_chance = 0.1;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto rng = gen::instance_rng(9, "normalize", i);
    const Formula f = gen::formula(rng, shape);
    const Mnf m = normalize(f);
    REQUIRE(is_mnf(m.to_formula()));
    REQUIRE(world_of_mnf(m) == val(f));
    REQUIRE(val(m.to_formula()) == val(f));
    REQUIRE(equiv(f, m.to_formula()));
  }
}

TEST_CASE("mnf and world are inverse") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto rng = gen::instance_rng(9, "mnf-world", i);
    const World x = gen::world(rng, {});
    REQUIRE(world_of_mnf(mnf_of_world(x)) == x);
    const Mnf m = gen::mnf(rng, 4, 0, 5, {2, 2, 4});
    REQUIRE(mnf_of_world(world_of_mnf(m)) == m);
  }
}

TEST_CASE("every property family passes and checks something") {
  fuzz::Options options;
  options.seed = 2024;
  options.count = 200;
  for (const auto& r : fuzz::run_all(options)) {
    CAPTURE(r.name);
    CAPTURE(r.counterexample);
    CHECK(r.ok());
    CHECK(r.vacuous == 0);
    CHECK(r.passed == options.count);
  }
}

TEST_CASE("a lift that ignores its exponent is caught") {
  fuzz::Options options;
  options.count = 200;
  options.semantics = fuzz::corrupted_semantics();
  const auto report = fuzz::run_family(fuzz::family("axiom-6-schmerl"), options);
  CHECK_FALSE(report.ok());
  CHECK(report.counterexample.find("Schmerl") != std::string::npos);
  CHECK_FALSE(fuzz::run_family(fuzz::family("unique-mnf"), options).ok());
}

TEST_CASE("derivability is truth at the characteristic world") {
  gen::FormulaShape shape;
  shape.max_modalities = 5;
  std::size_t positives = 0;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    auto rng = gen::instance_rng(9, "completeness", i);
    const Formula phi = gen::formula(rng, shape);
    const Formula psi = gen::chance(rng, 0.5) ? gen::weaken(rng, phi) : gen::formula(rng, shape);
    const bool d = derives({phi, psi});
    positives += d;
    REQUIRE(d == sat(val(phi), psi));
  }
  CHECK(positives > 1000);
}
