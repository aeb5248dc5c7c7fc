#include <doctest.h>

#include <algorithm>
#include <optional>

#include "tsc/ordinal.hpp"
#include "tsc/random.hpp"
#include "tsc/syntax.hpp"

using namespace tsc;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }
Ordinal w() { return Ordinal::omega(); }

// All CNF sums over a fixed exponent ladder with coefficients 0..max_coeff.
// Test-only enumerator, independent of add/mul.
std::vector<Ordinal> enumerate(const std::vector<Ordinal>& ladder_desc, Coefficient max_coeff) {
  std::vector<Ordinal> out;
  std::vector<Coefficient> digits(ladder_desc.size(), 0);
  while (true) {
    std::vector<Ordinal::Term> terms;
    for (std::size_t i = 0; i < ladder_desc.size(); ++i)
      if (digits[i] > 0) terms.push_back({ladder_desc[i], digits[i]});
    out.push_back(Ordinal::from_terms(std::move(terms)));
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == max_coeff) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Coefficient max_coefficient(const Ordinal& a) {
  Coefficient m = 0;
  for (const auto& t : a.terms()) m = std::max(m, t.coeff);
  return m;
}

}  // namespace

TEST_CASE("compare") {
  CHECK(compare(Ordinal{}, Ordinal{}) == std::strong_ordering::equal);
  CHECK(compare(w(), Ordinal{3}) == std::strong_ordering::greater);
  CHECK(compare(O("w^2+w"), O("w^2+1")) == std::strong_ordering::greater);
  CHECK(O("w^w") > O("w^5*100+w*7"));
  CHECK(O("w*2") < O("w*2+1"));
}

TEST_CASE("add") {
  CHECK(w() + Ordinal{1} == O("w+1"));
  CHECK(Ordinal{1} + w() == w());
  CHECK(O("w*3") + O("w^2") == O("w^2"));
  CHECK(O("w^2+w*3+4") + O("w*2+1") == O("w^2+w*5+1"));
  CHECK(Ordinal{2} + Ordinal{3} == Ordinal{5});
}

TEST_CASE("mul") {
  CHECK(w() * Ordinal{2} == O("w*2"));
  CHECK(Ordinal{2} * w() == w());
  CHECK(O("w+1") * Ordinal{2} == O("w*2+1"));
  CHECK(O("w+1") * w() == O("w^2"));
  CHECK(O("w^2*3+w") * O("w+2") == O("w^3+w^2*6+w"));
  CHECK(Ordinal{0} * w() == Ordinal{});
}

TEST_CASE("omega_pow and hyper_e are different operations") {
  CHECK(omega_pow(Ordinal{}) == Ordinal{1});
  CHECK(omega_pow(Ordinal{1}) == w());
  CHECK(omega_pow(w()) == O("w^w"));

  CHECK(hyper_e(Ordinal{}) == Ordinal{});
  CHECK(hyper_e(Ordinal{1}) == w());
  CHECK(hyper_e(w()) == O("w^w"));

  CHECK(hyper_e_n(0, O("w*2")) == O("w*2"));
  CHECK(hyper_e_n(2, Ordinal{1}) == O("w^w"));
  CHECK(hyper_e_n(1, Ordinal{}) == Ordinal{});
  CHECK(hyper_e_n(5, Ordinal{}) == Ordinal{});
}

TEST_CASE("ell") {
  CHECK(ell(Ordinal{}) == Ordinal{});
  CHECK(ell(O("w^2*3+w")) == Ordinal{1});
  CHECK(ell(Ordinal{5}) == Ordinal{});
  CHECK(ell(O("w^(w+1)")) == O("w+1"));
}

TEST_CASE("left_divide examples") {
  CHECK(left_divide(O("w*2"), w()) == Division{Ordinal{2}, Ordinal{}});
  CHECK(left_divide(O("w^2+w*3+5"), w()) == Division{O("w+3"), Ordinal{5}});
  CHECK(left_divide(Ordinal{5}, Ordinal{2}) == Division{Ordinal{2}, Ordinal{1}});
  CHECK(left_divide(Ordinal{3}, w()) == Division{Ordinal{}, Ordinal{3}});
  CHECK(left_divide(O("w^w*2"), O("w^w")) == Division{Ordinal{2}, Ordinal{}});
  CHECK_THROWS_AS(left_divide(w(), Ordinal{}), std::domain_error);
}

TEST_CASE("left_divide agrees with exhaustive search") {
  const std::vector<Ordinal> ladder{Ordinal{2}, Ordinal{1}, Ordinal{}};
  const auto small = enumerate(ladder, 3);
  for (const auto& b : small) {
    if (b.is_zero()) continue;
    for (const auto& a : small) {
      // the quotient of a by b has coefficients at most those of a
      std::optional<Division> found;
      for (const auto& q : small) {
        const Ordinal bq = b * q;
        if (bq > a) continue;
        for (const auto& r : small) {
          if (r < b && bq + r == a) {
            REQUIRE_FALSE(found.has_value());
            found = Division{q, r};
          }
        }
      }
      REQUIRE(found.has_value());
      CHECK(left_divide(a, b) == *found);
    }
  }
}

TEST_CASE("round_up_geq examples") {
  CHECK(round_up_geq(O("w*2"), Ordinal{1}) == O("w*2"));
  CHECK(round_up_geq(O("w+1"), Ordinal{1}) == O("w*2"));
  CHECK(round_up_geq(Ordinal{}, w()) == O("w^w"));
  CHECK(round_up_geq(Ordinal{7}, Ordinal{}) == Ordinal{7});
  CHECK(round_up_geq(O("w^2*3+w+4"), Ordinal{2}) == O("w^2*4"));
}

TEST_CASE("round_up_geq is the least qualifying ordinal (bounded enumeration)") {
  const std::vector<Ordinal> ladder{O("w+1"), w(), Ordinal{2}, Ordinal{1}, Ordinal{}};
  const auto universe = enumerate(ladder, 4);
  for (const auto& z : universe) {
    if (max_coefficient(z) > 3) continue;
    for (const auto& floor : ladder) {
      const auto it = std::find_if(universe.begin(), universe.end(), [&](const Ordinal& cand) {
        return cand >= z && (floor.is_zero() || (!cand.is_zero() && ell(cand) >= floor));
      });
      REQUIRE(it != universe.end());
      CHECK_MESSAGE(round_up_geq(z, floor) == *it, render(z), " floor ", render(floor));
    }
  }
}

TEST_CASE("algebraic laws on random ordinals") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto rng = gen::instance_rng(11, "ordinal-laws", i);
    const Ordinal a = gen::ordinal(rng, {3, 3, 5});
    const Ordinal b = gen::ordinal(rng, {3, 3, 5});
    const Ordinal c = gen::ordinal(rng, {3, 3, 5});
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + Ordinal{} == a);
    REQUIRE(Ordinal{} + a == a);
    REQUIRE(a * Ordinal{1} == a);
    REQUIRE(Ordinal{1} * a == a);
    if (!b.is_zero()) {
      const auto [q, r] = left_divide(a, b);
      REQUIRE(b * q + r == a);
      REQUIRE(r < b);
    }
    REQUIRE(ell(a + omega_pow(b)) == b);
    if (!a.is_zero()) REQUIRE(hyper_e(a) == omega_pow(a));
    REQUIRE(hyper_e_n(3, a) == hyper_e_n(1, hyper_e_n(2, a)));
    // a <= a + b, and b <= a + b
    REQUIRE(a <= a + b);
    REQUIRE(b <= a + b);
  }
}

TEST_CASE("representation invariants") {
  CHECK_THROWS_AS(Ordinal::from_terms({{Ordinal{}, 1}, {Ordinal{1}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::from_terms({{Ordinal{1}, 0}}), std::invalid_argument);
  CHECK(Ordinal{3}.is_finite());
  CHECK(O("w+1").is_successor());
  CHECK(O("w^2").is_limit());
  CHECK(Ordinal{4}.as_natural() == 4);
  CHECK_THROWS_AS(w().as_natural(), std::domain_error);
  CHECK(cnf_depth(Ordinal{3}) == 0);
  CHECK(cnf_depth(O("w^w+1")) == 2);
}

TEST_CASE("coefficient overflow is reported, not wrapped") {
  const Ordinal big{~Coefficient{0}};
  CHECK_THROWS_AS(big + Ordinal{1}, OrdinalOverflow);
  CHECK_THROWS_AS(big * Ordinal{2}, OrdinalOverflow);
  CHECK_THROWS_AS(O("w*18446744073709551615") + w(), OrdinalOverflow);
}
