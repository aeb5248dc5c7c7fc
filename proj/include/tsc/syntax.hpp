#pragma once

// Concrete ASCII syntax.
//
//   sequent  := formula "|-" formula
//   formula  := atom ("&" atom)*                 left-associative
//   atom     := "T" | "<" nat "^" ordinal ">" atom | "(" formula ")"
//   ordinal  := oterm ("+" oterm)*
//   oterm    := ("w" ("^" ofact)? | nat) ("*" nat)?
//   ofact    := nat | "w" | "(" ordinal ")"
//   world    := "[" (ordinal ("," ordinal)*)? "]"
//
// Whitespace between tokens is ignored. The aliases ⊤ ∧ ω ⊢ are accepted on
// input, as are ⟨ and ⟩ for < and >; output is always ASCII.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/frame.hpp"
#include "tsc/normalform.hpp"
#include "tsc/ordinal.hpp"

namespace tsc {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  /// Byte offset into the input.
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

Ordinal parse_ordinal(std::string_view text);
Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);
/// Also validates the l-sequence condition; throws WorldError on violation.
World parse_world(std::string_view text);

std::string render(const Ordinal& a);
std::string render(const Formula& f);
std::string render(const Sequent& s);
std::string render(const World& x);
std::string render(const Mnf& m);

}  // namespace tsc
