// Copyright 2026 The GFL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <functional>
#include <optional>

#include "gfl/errors.h"
#include "gfl/formula.h"

namespace gfl {

namespace {

enum class Tok { kIdent, kLParen, kRParen, kComma, kDot, kNot, kAnd, kOr,
                 kArrow, kEq, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, col = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '.': kind = Tok::kDot; break;
      case '~': kind = Tok::kNot; break;
      case '&': kind = Tok::kAnd; break;
      case '|': kind = Tok::kOr; break;
      case '=': kind = Tok::kEq; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::kArrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(l, col, std::string("unexpected character '") + c +
                                     "'");
    }
    out.push_back({kind, std::string(text.substr(i, len)), l, col});
    advance(len);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

bool IsKeyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "true" || s == "false" ||
         s == "R";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula Run() {
    Formula f = ParseFormula();
    if (Peek().kind != Tok::kEnd) Fail("unexpected '" + Peek().text + "'");
    return f;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Take() { return tokens_[pos_++]; }

  [[noreturn]] void Fail(const std::string& what) const {
    const Token& t = Peek();
    if (t.kind == Tok::kEnd && !open_.empty()) {
      throw ParseError(open_.back().line, open_.back().column,
                       "unclosed '(' at end of input");
    }
    throw ParseError(t.line, t.column,
                     t.kind == Tok::kEnd ? "unexpected end of input: " + what
                                         : what);
  }

  void Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) Fail(std::string("expected ") + what);
    Take();
  }

  void Open() {
    if (Peek().kind != Tok::kLParen) Fail("expected '('");
    open_.push_back(Take());
  }

  void Close() {
    Expect(Tok::kRParen, "')'");
    open_.pop_back();
  }

  std::string Variable() {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || IsKeyword(t.text)) Fail("expected a variable");
    return Take().text;
  }

  bool AtQuantifier() const {
    return Peek().kind == Tok::kIdent &&
           (Peek().text == "forall" || Peek().text == "exists");
  }

  Formula ParseFormula() {
    if (AtQuantifier()) return ParseQuantifier();
    return ParseImplies();
  }

  Formula ParseQuantifier() {
    const bool forall = Take().text == "forall";
    std::string var = Variable();
    Formula body = Formula::True();
    if (Peek().kind == Tok::kDot) {
      Take();
      body = ParseFormula();
    } else if (Peek().kind == Tok::kLParen) {
      Open();
      body = ParseFormula();
      Close();
    } else {
      Fail("expected '.' or '(' after the quantified variable");
    }
    return forall ? Formula::Forall(std::move(var), std::move(body))
                  : Formula::Exists(std::move(var), std::move(body));
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (Peek().kind != Tok::kArrow) return lhs;
    Take();
    Formula rhs = AtQuantifier() ? ParseQuantifier() : ParseImplies();
    return Formula::Implies(std::move(lhs), std::move(rhs));
  }

  Formula ParseOr() {
    std::vector<Formula> parts{ParseAnd()};
    while (Peek().kind == Tok::kOr) {
      Take();
      parts.push_back(ParseAnd());
    }
    return Formula::Disj(std::move(parts));
  }

  Formula ParseAnd() {
    std::vector<Formula> parts{ParseUnary()};
    while (Peek().kind == Tok::kAnd) {
      Take();
      parts.push_back(ParseUnary());
    }
    return Formula::Conj(std::move(parts));
  }

  Formula ParseUnary() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kNot:
        Take();
        return Formula::Not(ParseUnary());
      case Tok::kLParen: {
        Open();
        Formula f = ParseFormula();
        Close();
        return f;
      }
      case Tok::kIdent:
        if (AtQuantifier()) return ParseQuantifier();
        if (t.text == "true") {
          Take();
          return Formula::True();
        }
        if (t.text == "false") {
          Take();
          return Formula::False();
        }
        if (t.text == "R") {
          Take();
          Open();
          std::string x = Variable();
          Expect(Tok::kComma, "','");
          std::string y = Variable();
          Close();
          return Formula::Rel(std::move(x), std::move(y));
        } else {
          std::string x = Variable();
          Expect(Tok::kEq, "'='");
          std::string y = Variable();
          return Formula::Eq(std::move(x), std::move(y));
        }
      default:
        Fail(t.kind == Tok::kEnd ? "expected a formula"
                                 : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Token> open_;
};

// Renames bound variables by depth, skipping the free names.
class Renamer {
 public:
  explicit Renamer(const std::set<std::string>& free) : free_(free) {}

  Formula Rename(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kTrue:
      case Formula::Kind::kFalse:
        return f;
      case Formula::Kind::kRel:
        return Formula::Rel(Lookup(f.lhs_var()), Lookup(f.rhs_var()));
      case Formula::Kind::kEq:
        return Formula::Eq(Lookup(f.lhs_var()), Lookup(f.rhs_var()));
      case Formula::Kind::kNot:
        return Formula::Not(Rename(f.child(0)));
      case Formula::Kind::kAnd:
      case Formula::Kind::kOr: {
        std::vector<Formula> parts;
        for (const Formula& c : f.children()) parts.push_back(Rename(c));
        return f.kind() == Formula::Kind::kAnd ? Formula::And(std::move(parts))
                                               : Formula::Or(std::move(parts));
      }
      case Formula::Kind::kImplies:
        return Formula::Implies(Rename(f.child(0)), Rename(f.child(1)));
      case Formula::Kind::kForall:
      case Formula::Kind::kExists: {
        std::string fresh = NameAtDepth(scope_.size());
        scope_.emplace_back(f.var(), fresh);
        Formula body = Rename(f.child(0));
        scope_.pop_back();
        return f.kind() == Formula::Kind::kForall
                   ? Formula::Forall(std::move(fresh), std::move(body))
                   : Formula::Exists(std::move(fresh), std::move(body));
      }
    }
    return f;
  }

 private:
  std::string Lookup(const std::string& v) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    return v;
  }

  std::string NameAtDepth(std::size_t depth) {
    while (names_.size() <= depth) {
      std::string candidate;
      do {
        candidate = "x" + std::to_string(++counter_);
      } while (free_.count(candidate) > 0);
      names_.push_back(candidate);
    }
    return names_[depth];
  }

  const std::set<std::string>& free_;
  std::vector<std::pair<std::string, std::string>> scope_;
  std::vector<std::string> names_;
  int counter_ = 0;
};

}  // namespace

Formula ParseFormula(std::string_view text) {
  Formula raw = Parser(Lex(text)).Run();
  const std::set<std::string> free = raw.FreeVariables();
  return Renamer(free).Rename(raw);
}

Formula ParseSentence(std::string_view text,
                      std::vector<std::string>* warnings) {
  Formula f = ParseFormula(text);
  if (warnings != nullptr) {
    for (const std::string& v : f.FreeVariables()) {
      warnings->push_back("variable '" + v + "' is not bound");
    }
  }
  return f;
}

}  // namespace gfl
