/* Copyright 2026 The qn4 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qn4/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qn4 {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  bool core = true;
  std::size_t depth = 0;
  std::size_t size = 1;
};

bool is_binary(Kind k) {
  switch (k) {
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
    case Kind::Iff:
    case Kind::StrongImp:
    case Kind::StrongIff:
      return true;
    default:
      return false;
  }
}

static bool is_derived(Kind k) {
  return k == Kind::Iff || k == Kind::StrongImp || k == Kind::StrongIff || k == Kind::Abs;
}

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::unary(Kind kind, Formula operand) {
  if (kind != Kind::Neg && kind != Kind::Abs) throw std::invalid_argument("not a unary connective");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->core = !is_derived(kind) && operand.is_core();
  n->depth = operand.depth() + 1;
  n->size = operand.size() + 1;
  n->lhs = std::move(operand);
  return Formula(std::move(n));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (!is_binary(kind)) throw std::invalid_argument("not a binary connective");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->core = !is_derived(kind) && lhs.is_core() && rhs.is_core();
  n->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  n->size = lhs.size() + rhs.size() + 1;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Kind Formula::kind() const { return node_->kind; }
bool Formula::is_core() const { return node_->core; }
std::size_t Formula::depth() const { return node_->depth; }
std::size_t Formula::size() const { return node_->size; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::Var) throw std::logic_error("name() on a non-variable");
  return node_->name;
}

const Formula& Formula::lhs() const {
  if (!node_->lhs) throw std::logic_error("lhs() on a variable");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs) throw std::logic_error("rhs() on a non-binary node");
  return *node_->rhs;
}

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.is_var()) return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
  if (int c = compare(a.lhs(), b.lhs()); c != 0) return c;
  if (is_binary(a.kind())) return compare(a.rhs(), b.rhs());
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.size() != b.size() || a.kind() != b.kind()) return false;
  return compare(a, b) == 0;
}

bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

Formula var(std::string name) { return Formula::var(std::move(name)); }
Formula neg(Formula a) { return Formula::unary(Kind::Neg, std::move(a)); }
Formula conj(Formula a, Formula b) { return Formula::binary(Kind::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::binary(Kind::Or, std::move(a), std::move(b)); }
Formula imp(Formula a, Formula b) { return Formula::binary(Kind::Imp, std::move(a), std::move(b)); }
Formula iff(Formula a, Formula b) { return Formula::binary(Kind::Iff, std::move(a), std::move(b)); }
Formula strong_imp(Formula a, Formula b) {
  return Formula::binary(Kind::StrongImp, std::move(a), std::move(b));
}
Formula strong_iff(Formula a, Formula b) {
  return Formula::binary(Kind::StrongIff, std::move(a), std::move(b));
}
Formula abs_of(Formula a) { return Formula::unary(Kind::Abs, std::move(a)); }

Formula biconditional(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("syntax error at offset " + std::to_string(position) + ": " + message),
      position_(position) {}

UnboundVariable::UnboundVariable(const std::string& name)
    : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Not, And, Or, Imp, Iff, SImp, SIff, Bar, LParen, RParen, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

struct Glyph {
  std::string_view text;
  Tok kind;
};

// Longest match first.
constexpr Glyph kGlyphs[] = {
    {"<=>", Tok::SIff}, {"<->", Tok::Iff}, {"->", Tok::Imp},   {"=>", Tok::SImp},
    {"/\\", Tok::And},  {"\\/", Tok::Or},  {"~", Tok::Not},    {"&", Tok::And},
    {"|", Tok::Bar},    {"(", Tok::LParen}, {")", Tok::RParen}, {"=", Tok::Eq},
    // UTF-8 glyphs
    {"∼", Tok::Not}, {"¬", Tok::Not}, {"∧", Tok::And}, {"∨", Tok::Or},
    {"→", Tok::Imp}, {"↔", Tok::Iff}, {"⇒", Tok::SImp}, {"⇔", Tok::SIff},
    {"≈", Tok::Eq},
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& g : kGlyphs) {
      if (text.substr(i, g.text.size()) == g.text) {
        out.push_back({g.kind, std::string(g.text), i});
        i += g.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(i, std::string("unexpected character '") + text[i] + "'");
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula formula() {
    Formula f = iff_level();
    expect_end();
    return f;
  }

  Equation equation() {
    Formula lhs = iff_level();
    if (peek().kind != Tok::Eq) throw ParseError(peek().pos, "expected '=' in equation");
    ++pos_;
    Formula rhs = iff_level();
    expect_end();
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
  }

  // <-> and <=> bind weakest; right-associative.
  Formula iff_level() {
    Formula lhs = imp_level();
    if (peek().kind == Tok::Iff || peek().kind == Tok::SIff) {
      Kind k = peek().kind == Tok::Iff ? Kind::Iff : Kind::StrongIff;
      ++pos_;
      return Formula::binary(k, std::move(lhs), iff_level());
    }
    return lhs;
  }

  Formula imp_level() {
    Formula lhs = or_level();
    if (peek().kind == Tok::Imp || peek().kind == Tok::SImp) {
      Kind k = peek().kind == Tok::Imp ? Kind::Imp : Kind::StrongImp;
      ++pos_;
      return Formula::binary(k, std::move(lhs), imp_level());
    }
    return lhs;
  }

  Formula or_level() {
    Formula lhs = and_level();
    while (peek().kind == Tok::Or) {
      ++pos_;
      lhs = disj(std::move(lhs), and_level());
    }
    return lhs;
  }

  Formula and_level() {
    Formula lhs = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      lhs = conj(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      ++pos_;
      return neg(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        ++pos_;
        return var(t.text);
      case Tok::LParen: {
        ++pos_;
        Formula inner = iff_level();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
        ++pos_;
        return inner;
      }
      case Tok::Bar: {
        ++pos_;
        Formula inner = iff_level();
        if (peek().kind != Tok::Bar) throw ParseError(peek().pos, "expected closing '|'");
        ++pos_;
        return abs_of(std::move(inner));
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_extended(std::string_view text) { return Parser(text).formula(); }

Formula parse(std::string_view text) { return expand_derived(parse_extended(text)); }

Equation parse_equation(std::string_view text) {
  Equation e = Parser(text).equation();
  return {expand_derived(e.lhs), expand_derived(e.rhs)};
}

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(Kind k) {
  switch (k) {
    case Kind::Iff:
    case Kind::StrongIff:
      return 0;
    case Kind::Imp:
    case Kind::StrongImp:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    default:
      return 4;
  }
}

std::string_view symbol(Kind k) {
  switch (k) {
    case Kind::And:
      return " /\\ ";
    case Kind::Or:
      return " \\/ ";
    case Kind::Imp:
      return " -> ";
    case Kind::Iff:
      return " <-> ";
    case Kind::StrongImp:
      return " => ";
    case Kind::StrongIff:
      return " <=> ";
    default:
      return "";
  }
}

void print(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Kind::Var:
      out += f.name();
      return;
    case Kind::Neg:
      out += '~';
      child(f.operand(), precedence(f.operand().kind()) < 4);
      return;
    case Kind::Abs:
      out += '|';
      print(f.operand(), out);
      out += '|';
      return;
    default:
      break;
  }
  const int level = precedence(f.kind());
  const bool right_assoc = level <= 1;
  const int l = precedence(f.lhs().kind());
  const int r = precedence(f.rhs().kind());
  child(f.lhs(), right_assoc ? l <= level : l < level);
  out += symbol(f.kind());
  child(f.rhs(), right_assoc ? r < level : r <= level);
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string render(const Equation& e) { return render(e.lhs) + " = " + render(e.rhs); }

// ---------------------------------------------------------------------------
// Substitution and matching

Formula substitute(const Formula& f, const Substitution& s) {
  switch (f.kind()) {
    case Kind::Var: {
      auto it = s.find(f.name());
      if (it == s.end()) throw UnboundVariable(f.name());
      return it->second;
    }
    case Kind::Neg:
    case Kind::Abs:
      return Formula::unary(f.kind(), substitute(f.operand(), s));
    default:
      return Formula::binary(f.kind(), substitute(f.lhs(), s), substitute(f.rhs(), s));
  }
}

static bool match_into(const Formula& scheme, const Formula& target, Substitution& s) {
  if (scheme.is_var()) {
    auto [it, inserted] = s.emplace(scheme.name(), target);
    return inserted || it->second == target;
  }
  if (scheme.kind() != target.kind()) return false;
  if (!match_into(scheme.lhs(), target.lhs(), s)) return false;
  return !is_binary(scheme.kind()) || match_into(scheme.rhs(), target.rhs(), s);
}

std::optional<Substitution> match_scheme(const Formula& scheme, const Formula& target) {
  Substitution s;
  if (!match_into(scheme, target, s)) return std::nullopt;
  return s;
}

Formula expand_derived(const Formula& f) {
  if (f.is_core()) return f;
  switch (f.kind()) {
    case Kind::Neg:
      return neg(expand_derived(f.operand()));
    case Kind::Abs: {
      Formula a = expand_derived(f.operand());
      return imp(a, a);
    }
    default:
      break;
  }
  Formula a = expand_derived(f.lhs());
  Formula b = expand_derived(f.rhs());
  auto strong = [](const Formula& x, const Formula& y) { return conj(imp(x, y), imp(neg(y), neg(x))); };
  switch (f.kind()) {
    case Kind::And:
      return conj(a, b);
    case Kind::Or:
      return disj(a, b);
    case Kind::Imp:
      return imp(a, b);
    case Kind::Iff:
      return biconditional(a, b);
    case Kind::StrongImp:
      return strong(a, b);
    case Kind::StrongIff:
      return conj(strong(a, b), strong(b, a));
    default:
      throw std::logic_error("unreachable");
  }
}

static void collect(const Formula& f, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (f.is_var()) {
    if (seen.insert(f.name()).second) out.push_back(f.name());
    return;
  }
  collect(f.lhs(), out, seen);
  if (is_binary(f.kind())) collect(f.rhs(), out, seen);
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect(f, out, seen);
  return out;
}

std::vector<std::string> variables(const Equation& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect(e.lhs, out, seen);
  collect(e.rhs, out, seen);
  return out;
}

bool occurs(const std::string& name, const Formula& f) {
  if (f.is_var()) return f.name() == name;
  if (occurs(name, f.lhs())) return true;
  return is_binary(f.kind()) && occurs(name, f.rhs());
}

}  // namespace qn4
