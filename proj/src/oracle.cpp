#include "tsc/oracle.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "tsc/normalform.hpp"
#include "tsc/syntax.hpp"

namespace tsc::oracle {

StepUnfolder::StepUnfolder(std::vector<World> pool, Coefficient max_alpha) : max_alpha_(max_alpha) {
  for (auto& w : pool) index_of(w);
}

std::size_t StepUnfolder::index_of(const World& w) {
  auto [it, inserted] = index_.try_emplace(w, pool_.size());
  if (inserted) pool_.push_back(w);
  return it->second;
}

bool StepUnfolder::edge(Base n, std::size_t x, std::size_t z) {
  auto& row = rows_[{n, x}];
  while (row.size() < pool_.size()) row.push_back(step(pool_[x], n, pool_[row.size()]) ? 1 : 0);
  return row[z] != 0;
}

bool StepUnfolder::holds(const World& x, Base n, Coefficient alpha, const World& y) {
  if (alpha > max_alpha_) throw BudgetError("unfold_steps: exponent " + std::to_string(alpha) + " exceeds budget");
  const std::size_t xi = index_of(x);
  const std::size_t yi = index_of(y);
  return holds_at(xi, n, alpha, yi);
}

bool StepUnfolder::holds_at(std::size_t x, Base n, Coefficient alpha, std::size_t y) {
  if (alpha == 0) return x == y;
  const auto key = std::make_tuple(x, n, alpha, y);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool all = true;
  for (Coefficient beta = 0; beta < alpha && all; ++beta) {
    bool found = false;
    for (std::size_t z = 0; z < pool_.size() && !found; ++z)
      found = edge(n, x, z) && holds_at(z, n, beta, y);
    all = found;
  }
  memo_[key] = all;
  return all;
}

bool unfold_steps(const World& x, Base n, Coefficient alpha, const World& y, const SearchBudget& budget) {
  StepUnfolder unfolder(budget.candidate_pool, budget.max_alpha);
  return unfolder.holds(x, n, alpha, y);
}

namespace {

class SatOracle {
public:
  SatOracle(const SearchBudget& budget, const World& x)
      : pool_(budget.candidate_pool), unfolder_(budget.candidate_pool, budget.max_alpha), max_alpha_(budget.max_alpha) {
    pool_.push_back(x);
  }

  bool sat(const World& x, const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Top: return true;
      case Formula::Kind::Conj: return sat(x, f.left()) && sat(x, f.right());
      case Formula::Kind::Diam: break;
    }
    const auto key = std::make_pair(x, &f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    if (!f.exponent().is_finite() || f.exponent().as_natural() > max_alpha_)
      throw BudgetError("direct_sat: exponent " + render(f.exponent()) + " outside the finite budget");
    const Coefficient alpha = f.exponent().as_natural();

    bool result = false;
    if (alpha == 0) {
      result = sat(x, f.body());
    } else {
      for (std::size_t i = 0; i < pool_.size() && !result; ++i) {
        const World y = pool_[i];
        result = sat(y, f.body()) && unfolder_.holds(x, f.base(), alpha, y);
      }
    }
    memo_[key] = result;
    return result;
  }

private:
  std::vector<World> pool_;
  StepUnfolder unfolder_;
  Coefficient max_alpha_;
  std::map<std::pair<World, const Formula*>, bool> memo_;
};

// ---- proof search -------------------------------------------------------

class Universe {
public:
  explicit Universe(std::size_t cap) : cap_(cap) {}

  // Adds f and all its subformulas. Returns false once the cap is hit.
  bool add(const Formula& f) {
    if (index_.contains(render(f))) return true;
    switch (f.kind()) {
      case Formula::Kind::Top: break;
      case Formula::Kind::Conj:
        if (!add(f.left()) || !add(f.right())) return false;
        break;
      case Formula::Kind::Diam:
        if (!add(f.body())) return false;
        break;
    }
    if (items_.size() >= cap_) return false;
    index_.emplace(render(f), items_.size());
    items_.push_back(f);
    return true;
  }

  std::optional<std::size_t> find(const Formula& f) const {
    if (auto it = index_.find(render(f)); it != index_.end()) return it->second;
    return std::nullopt;
  }

  const std::vector<Formula>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

private:
  std::size_t cap_;
  std::vector<Formula> items_;
  std::map<std::string, std::size_t> index_;
};

// The MNF body of a Schmerl axiom instance: monomials with a valid MNF shape.
std::optional<std::vector<Monomial>> mnf_body(const Formula& f) {
  auto monos = as_monomials(f);
  if (!monos || monos->empty()) return std::nullopt;
  try {
    Mnf::from_monomials(*monos);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return monos;
}

// The right-hand side of the Schmerl axiom for <n^alpha>body, as a conjunct list.
std::optional<std::vector<Formula>> schmerl_rhs(Base n, const Ordinal& alpha, const Formula& body) {
  auto monos = mnf_body(body);
  if (!monos || monos->front().base <= n) return std::nullopt;
  const auto& head = monos->front();
  Ordinal exponent = hyper_e_n(head.base - n, head.exponent) * (Ordinal{1} + alpha);
  std::vector<Formula> out{Formula::diam(n, std::move(exponent), Formula::top())};
  auto rest = flatten_conjuncts(body);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_rule4_shape(const Formula& f) {
  // <n^a>p & <m^(b+1)>q with n > m
  return f.is_conj() && f.left().is_diam() && f.right().is_diam() && f.left().base() > f.right().base() &&
         f.right().exponent().is_successor();
}

std::vector<Formula> enrichments(const Formula& g) {
  std::vector<Formula> out;
  if (g.is_diam()) {
    const Base k = g.base();
    const Formula& body = g.body();
    if (g.exponent().is_zero()) out.push_back(body);
    for (Base n = 0; n < k; ++n) out.push_back(Formula::diam(n, hyper_e_n(k - n, g.exponent()), body));
    if (body.is_diam() && body.base() == k)
      out.push_back(Formula::diam(k, body.exponent() + g.exponent(), body.body()));
    if (auto rhs = schmerl_rhs(k, g.exponent(), body)) out.push_back(conjoin(*rhs));
    if (body.is_conj() && body.right().is_diam() && k > body.right().base() &&
        body.right().exponent().is_successor())
      out.push_back(Formula::conj(Formula::diam(k, g.exponent(), body.left()), body.right()));
  }
  if (is_rule4_shape(g)) {
    const Formula& l = g.left();
    out.push_back(Formula::diam(l.base(), l.exponent(), Formula::conj(l.body(), g.right())));
  }
  // Schmerl read right to left: <n^(e^k(a0)*(1+a))>T & MNF  ->  <n^a>MNF
  auto parts = flatten_conjuncts(g);
  if (parts.size() >= 2 && parts[0].is_diam() && parts[0].body().is_top()) {
    std::vector<Formula> rest(parts.begin() + 1, parts.end());
    Formula body = conjoin(rest);
    if (auto monos = mnf_body(body); monos && monos->front().base > parts[0].base()) {
      const Base n = parts[0].base();
      const Ordinal unit = hyper_e_n(monos->front().base - n, monos->front().exponent);
      const auto [q, r] = left_divide(parts[0].exponent(), unit);
      if (r.is_zero() && !q.is_zero()) {
        // q = 1 + alpha
        Ordinal alpha = q.is_finite() ? Ordinal{q.as_natural() - 1} : q;
        out.push_back(Formula::diam(n, std::move(alpha), body));
      }
    }
  }
  return out;
}

bool is_axiom(const Formula& a, const Formula& b) {
  // Axiom 1
  if (a == b || b.is_top()) return true;
  // Axiom 2
  if (a.is_conj() && (a.left() == b || a.right() == b)) return true;
  // <n^0>phi is phi
  if (a.is_diam() && a.exponent().is_zero() && a.body() == b) return true;
  if (b.is_diam() && b.exponent().is_zero() && b.body() == a) return true;
  if (!a.is_diam() && !b.is_diam()) return false;

  if (a.is_diam() && b.is_diam()) {
    // Axiom 3
    if (a.base() == b.base() && a.body() == b.body() && b.exponent() < a.exponent()) return true;
    // Axiom 4, both directions
    auto coadditive = [](const Formula& single, const Formula& nested) {
      return nested.body().is_diam() && single.base() == nested.base() && nested.body().base() == nested.base() &&
             single.body() == nested.body().body() &&
             single.exponent() == nested.body().exponent() + nested.exponent();
    };
    if (coadditive(a, b) || coadditive(b, a)) return true;
    // Axiom 5
    if (b.base() < a.base() && a.body() == b.body() &&
        b.exponent() == hyper_e_n(a.base() - b.base(), a.exponent()))
      return true;
  }
  // Axiom 6, both directions
  auto schmerl = [](const Formula& lhs, const Formula& rhs) {
    if (!lhs.is_diam()) return false;
    auto expected = schmerl_rhs(lhs.base(), lhs.exponent(), lhs.body());
    return expected && flatten_conjuncts(rhs) == *expected;
  };
  return schmerl(a, b) || schmerl(b, a);
}

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& row, std::size_t i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

bool direct_sat(const World& x, const Formula& f, const SearchBudget& budget) {
  SatOracle oracle(budget, x);
  return oracle.sat(x, f);
}

bool proof_search(const Sequent& s, const SearchBudget& budget) {
  if (budget.max_depth == 0) throw BudgetError("proof_search: max_depth must be at least 1");
  Universe universe(budget.max_universe);
  if (!universe.add(s.lhs) || !universe.add(s.rhs))
    throw BudgetError("proof_search: sequent exceeds the formula universe budget");

  for (int round = 0; round < 2; ++round) {
    const auto snapshot = universe.items();
    bool room = true;
    for (const auto& g : snapshot) {
      for (const auto& extra : enrichments(g)) {
        if (!(room = universe.add(extra))) break;
      }
      if (!room) break;
    }
    if (!room) break;
  }

  const auto& items = universe.items();
  const std::size_t size = items.size();
  const std::size_t words = (size + 63) / 64;
  std::vector<Bits> derived(size, Bits(words, 0));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (is_axiom(items[a], items[b])) set_bit(derived[a], b);

  const std::size_t lhs = *universe.find(s.lhs);
  const std::size_t rhs = *universe.find(s.rhs);
  if (test_bit(derived[lhs], rhs)) return true;

  // Pre-index the rule shapes present in the universe.
  struct ConjShape { std::size_t self, left, right; };
  struct DiamPair { std::size_t outer_p, outer_q, p, q; };
  struct Rule4 { std::size_t lhs, rhs, p, q; };
  std::vector<ConjShape> conjs;
  std::vector<DiamPair> diam_pairs;
  std::vector<Rule4> rule4;
  for (std::size_t i = 0; i < size; ++i) {
    const Formula& f = items[i];
    if (f.is_conj()) conjs.push_back({i, *universe.find(f.left()), *universe.find(f.right())});
    if (!f.is_diam()) continue;
    for (std::size_t j = 0; j < size; ++j) {
      const Formula& g = items[j];
      if (i != j && g.is_diam() && g.base() == f.base() && g.exponent() == f.exponent())
        diam_pairs.push_back({i, j, *universe.find(f.body()), *universe.find(g.body())});
    }
    const Formula& body = f.body();
    if (body.is_conj() && body.right().is_diam() && f.base() > body.right().base() &&
        body.right().exponent().is_successor()) {
      auto premise = universe.find(Formula::conj(Formula::diam(f.base(), f.exponent(), body.left()), body.right()));
      if (premise)
        rule4.push_back({*premise, i, *universe.find(body.left()), *universe.find(body.right().body())});
    }
  }

  for (std::size_t depth = 1; depth <= budget.max_depth; ++depth) {
    auto next = derived;
    // Rule 2: transitivity
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        if (test_bit(derived[a], b))
          for (std::size_t w = 0; w < words; ++w) next[a][w] |= derived[b][w];
    // Rule 1: conjunction introduction
    for (const auto& c : conjs)
      for (std::size_t a = 0; a < size; ++a)
        if (test_bit(derived[a], c.left) && test_bit(derived[a], c.right)) set_bit(next[a], c.self);
    // Rule 3: necessitation under <n^alpha>
    for (const auto& d : diam_pairs)
      if (test_bit(derived[d.p], d.q)) set_bit(next[d.outer_p], d.outer_q);
    // Rule 4
    for (const auto& r : rule4)
      if (test_bit(derived[r.p], r.q)) set_bit(next[r.lhs], r.rhs);

    derived = std::move(next);
    if (test_bit(derived[lhs], rhs)) return true;
  }
  return false;
}

std::vector<World> lift_closed_pool(std::span<const World> seeds, Base max_base, Coefficient max_alpha) {
  std::set<World> seen;
  std::vector<World> out;
  auto push = [&](World w) {
    if (seen.insert(w).second) out.push_back(std::move(w));
  };
  for (const auto& s : seeds) push(s);
  for (const auto& s : seeds)
    for (Base n = 0; n <= max_base; ++n)
      for (Coefficient k = 1; k <= max_alpha; ++k) push(lift(s, n, Ordinal{k}));
  return out;
}

namespace {

World collect_witnesses(const Formula& f, std::set<World>& seen, std::vector<World>& out) {
  auto push = [&](const World& w) {
    if (seen.insert(w).second) out.push_back(w);
  };
  World principal;
  switch (f.kind()) {
    case Formula::Kind::Top: break;
    case Formula::Kind::Conj:
      principal = join(collect_witnesses(f.left(), seen, out), collect_witnesses(f.right(), seen, out));
      break;
    case Formula::Kind::Diam: {
      if (!f.exponent().is_finite()) throw BudgetError("witness_pool: infinite exponent " + render(f.exponent()));
      const World inner = collect_witnesses(f.body(), seen, out);
      principal = inner;
      for (Coefficient k = 1; k <= f.exponent().as_natural(); ++k) {
        principal = lift(inner, f.base(), Ordinal{k});
        push(principal);
      }
      break;
    }
  }
  push(principal);
  return principal;
}

}  // namespace

std::vector<World> witness_pool(const Formula& f) {
  std::set<World> seen;
  std::vector<World> out;
  collect_witnesses(f, seen, out);
  return out;
}

}  // namespace tsc::oracle
