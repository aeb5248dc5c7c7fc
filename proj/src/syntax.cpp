#include "tsc/syntax.hpp"

#include <cctype>

namespace tsc {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

enum class Tok { Nat, Omega, Top, Amp, Lt, Gt, Caret, Star, Plus, LParen, RParen, LBrack, RBrack, Comma, Turnstile, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

struct Alias {
  std::string_view bytes;
  Tok kind;
};

constexpr Alias kAliases[] = {
    {"|-", Tok::Turnstile},
    {"\xE2\x8A\xA2", Tok::Turnstile},  // ⊢
    {"\xE2\x8A\xA4", Tok::Top},        // ⊤
    {"\xE2\x88\xA7", Tok::Amp},        // ∧
    {"\xCF\x89", Tok::Omega},          // ω
    {"\xE2\x9F\xA8", Tok::Lt},           // ⟨
    {"\xE2\x9F\xA9", Tok::Gt},           // ⟩
};

// Length of the UTF-8 sequence starting with lead byte c (1 for invalid bytes).
std::size_t utf8_length(unsigned char c) {
  if (c >= 0xF0 && c < 0xF8) return 4;
  if (c >= 0xE0) return c < 0xF0 ? 3 : 1;
  if (c >= 0xC0) return 2;
  return 1;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Nat, start, std::string(s.substr(start, i - start))});
      continue;
    }
    bool matched = false;
    for (const auto& alias : kAliases) {
      if (s.substr(i, alias.bytes.size()) == alias.bytes) {
        out.push_back({alias.kind, i, std::string(alias.bytes)});
        i += alias.bytes.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;

    Tok kind;
    switch (c) {
      case 'w': kind = Tok::Omega; break;
      case 'T': kind = Tok::Top; break;
      case '&': kind = Tok::Amp; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      case '^': kind = Tok::Caret; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBrack; break;
      case ']': kind = Tok::RBrack; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(i, {"a token"}, "'" + std::string(s.substr(i, utf8_length(c))) + "'");
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Nat: return "number";
    case Tok::Omega: return "'w'";
    case Tok::Top: return "'T'";
    case Tok::Amp: return "'&'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Caret: return "'^'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::Turnstile: return "'|-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Ordinal ordinal() {
    Ordinal out = oterm();
    while (accept(Tok::Plus)) out = out + oterm();
    return out;
  }

  Formula formula() {
    Formula out = atom();
    while (accept(Tok::Amp)) out = Formula::conj(out, atom());
    return out;
  }

  Sequent sequent() {
    Formula lhs = formula();
    if (peek().kind != Tok::Turnstile) fail({"'|-'", "'&'"});
    ++at_;
    Formula rhs = formula();
    if (peek().kind == Tok::Turnstile) fail({"'&'", "end of input"}, "a second '|-'");
    return {std::move(lhs), std::move(rhs)};
  }

  std::vector<Ordinal> world_coords() {
    expect(Tok::LBrack);
    std::vector<Ordinal> coords;
    if (accept(Tok::RBrack)) return coords;
    coords.push_back(ordinal());
    while (accept(Tok::Comma)) coords.push_back(ordinal());
    if (!accept(Tok::RBrack)) fail({"','", "']'", "'+'"});
    return coords;
  }

  void finish(std::vector<std::string> expected) {
    if (peek().kind != Tok::End) {
      expected.push_back("end of input");
      fail(std::move(expected));
    }
  }

private:
  const Token& peek() const { return toks_[at_]; }

  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++at_;
    return true;
  }

  const Token& expect(Tok t) {
    if (peek().kind != t) fail({token_name(t)});
    return toks_[at_++];
  }

  [[noreturn]] void fail(std::vector<std::string> expected, std::string found = {}) const {
    if (found.empty()) found = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
    throw ParseError(peek().pos, std::move(expected), found);
  }

  Coefficient nat() {
    const Token& t = expect(Tok::Nat);
    Coefficient value = 0;
    for (char c : t.text) {
      if (__builtin_mul_overflow(value, Coefficient{10}, &value) ||
          __builtin_add_overflow(value, static_cast<Coefficient>(c - '0'), &value))
        throw ParseError(t.pos, {"a number below 2^64"}, t.text);
    }
    return value;
  }

  Ordinal oterm() {
    Ordinal base;
    if (accept(Tok::Omega)) {
      base = accept(Tok::Caret) ? omega_pow(ofact()) : Ordinal::omega();
    } else if (peek().kind == Tok::Nat) {
      base = Ordinal{nat()};
    } else {
      fail({"number", "'w'"});
    }
    if (accept(Tok::Star)) {
      if (peek().kind != Tok::Nat) fail({"number"});
      base = base * Ordinal{nat()};
    }
    return base;
  }

  Ordinal ofact() {
    if (peek().kind == Tok::Nat) return Ordinal{nat()};
    if (accept(Tok::Omega)) return Ordinal::omega();
    if (accept(Tok::LParen)) {
      Ordinal inner = ordinal();
      if (!accept(Tok::RParen)) fail({"')'", "'+'"});
      return inner;
    }
    fail({"number", "'w'", "'('"});
  }

  Formula atom() {
    if (accept(Tok::Top)) return Formula::top();
    if (accept(Tok::Lt)) {
      const Coefficient base = nat();
      expect(Tok::Caret);
      Ordinal exponent = ordinal();
      if (!accept(Tok::Gt)) fail({"'>'", "'+'"});
      return Formula::diam(static_cast<Base>(base), std::move(exponent), atom());
    }
    if (accept(Tok::LParen)) {
      Formula inner = formula();
      if (!accept(Tok::RParen)) fail({"')'", "'&'"});
      return inner;
    }
    fail({"'T'", "'<'", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void render_into(std::string& out, const Ordinal& a);

void render_exponent(std::string& out, const Ordinal& e) {
  if (e.is_finite()) {
    out += std::to_string(e.as_natural());
  } else if (e == Ordinal::omega()) {
    out += 'w';
  } else {
    out += '(';
    render_into(out, e);
    out += ')';
  }
}

void render_into(std::string& out, const Ordinal& a) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal{1}) {
      out += '^';
      render_exponent(out, t.exponent);
    }
    if (t.coeff != 1) out += '*' + std::to_string(t.coeff);
  }
}

void render_into(std::string& out, const Formula& f, bool as_atom) {
  switch (f.kind()) {
    case Formula::Kind::Top: out += 'T'; return;
    case Formula::Kind::Diam:
      out += '<' + std::to_string(f.base()) + '^';
      render_into(out, f.exponent());
      out += '>';
      render_into(out, f.body(), true);
      return;
    case Formula::Kind::Conj:
      if (as_atom) out += '(';
      render_into(out, f.left(), false);
      out += " & ";
      render_into(out, f.right(), true);
      if (as_atom) out += ')';
      return;
  }
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                         describe_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

Ordinal parse_ordinal(std::string_view text) {
  Parser p(text);
  Ordinal out = p.ordinal();
  p.finish({"'+'"});
  return out;
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula out = p.formula();
  p.finish({"'&'"});
  return out;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  Sequent out = p.sequent();
  p.finish({"'&'"});
  return out;
}

World parse_world(std::string_view text) {
  Parser p(text);
  auto coords = p.world_coords();
  p.finish({});
  return World::check(std::move(coords));
}

std::string render(const Ordinal& a) {
  std::string out;
  render_into(out, a);
  return out;
}

std::string render(const Formula& f) {
  std::string out;
  render_into(out, f, false);
  return out;
}

std::string render(const Sequent& s) { return render(s.lhs) + " |- " + render(s.rhs); }

std::string render(const World& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.support(); ++i) {
    if (i > 0) out += ", ";
    render_into(out, x[i]);
  }
  return out + "]";
}

std::string render(const Mnf& m) { return render(m.to_formula()); }

}  // namespace tsc
