#include "tsc/formula.hpp"

#include <stdexcept>

namespace tsc {

struct Formula::Node {
  Kind kind = Kind::Top;
  Base base = 0;
  Ordinal exponent;
  // Conj: {left, right}; Diam: {body}.
  std::vector<Formula> children;
};

Formula::Kind Formula::kind() const { return node_->kind; }

Formula::Formula() {
  static const auto top = std::make_shared<const Node>();
  node_ = top;
}

Formula Formula::conj(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Conj;
  node->children = {std::move(left), std::move(right)};
  return Formula{std::move(node)};
}

Formula Formula::diam(Base base, Ordinal exponent, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Diam;
  node->base = base;
  node->exponent = std::move(exponent);
  node->children = {std::move(body)};
  return Formula{std::move(node)};
}

const Formula& Formula::left() const {
  if (!is_conj()) throw std::logic_error("left() on a non-conjunction");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_conj()) throw std::logic_error("right() on a non-conjunction");
  return node_->children[1];
}

Base Formula::base() const {
  if (!is_diam()) throw std::logic_error("base() on a non-modality");
  return node_->base;
}

const Ordinal& Formula::exponent() const {
  if (!is_diam()) throw std::logic_error("exponent() on a non-modality");
  return node_->exponent;
}

const Formula& Formula::body() const {
  if (!is_diam()) throw std::logic_error("body() on a non-modality");
  return node_->children[0];
}

std::size_t Formula::modal_count() const {
  switch (kind()) {
    case Kind::Top: return 0;
    case Kind::Conj: return left().modal_count() + right().modal_count();
    case Kind::Diam: return 1 + body().modal_count();
  }
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Conj: return a.left() == b.left() && a.right() == b.right();
    case Formula::Kind::Diam:
      return a.base() == b.base() && a.exponent() == b.exponent() && a.body() == b.body();
  }
  return false;
}

std::set<Base> n_mod(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top: return {};
    case Formula::Kind::Conj: {
      auto out = n_mod(f.left());
      out.merge(n_mod(f.right()));
      return out;
    }
    case Formula::Kind::Diam: {
      auto out = n_mod(f.body());
      out.insert(f.base());
      return out;
    }
  }
  return {};
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::conj(out, parts[i]);
  return out;
}

std::vector<Formula> flatten_conjuncts(const Formula& f) {
  if (!f.is_conj()) return {f};
  auto out = flatten_conjuncts(f.left());
  auto rest = flatten_conjuncts(f.right());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace tsc
