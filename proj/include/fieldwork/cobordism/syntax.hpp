#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fieldwork/error.hpp"

namespace fieldwork::cobordism {

/// Expression tree for a morphism of Cob(1) or Cob(2).
struct CobordismExpr {
  enum class Kind { Generator, Compose, Tensor };

  Kind kind = Kind::Generator;
  std::string name;            // generator name
  std::size_t arg = 0;         // n in id(n)
  std::vector<CobordismExpr> children;
  std::size_t position = 0;    // offset of the first character in the source

  static CobordismExpr generator(std::string n, std::size_t pos, std::size_t a = 0) {
    CobordismExpr e;
    e.name = std::move(n);
    e.arg = a;
    e.position = pos;
    return e;
  }

  /// Canonical text, fully parenthesized where needed.
  std::string str() const {
    switch (kind) {
      case Kind::Generator:
        return name == "id" ? "id(" + std::to_string(arg) + ")" : name;
      case Kind::Compose:
      case Kind::Tensor: {
        const char* sep = kind == Kind::Compose ? " ; " : " * ";
        std::string out;
        for (std::size_t i = 0; i < children.size(); ++i) {
          const auto& c = children[i];
          const bool wrap = c.kind != Kind::Generator && !(kind == Kind::Compose && c.kind == Kind::Tensor);
          out += (i ? sep : "") + (wrap ? "(" + c.str() + ")" : c.str());
        }
        return out;
      }
    }
    return {};
  }

  /// S-expression form used in tests and output, e.g. "(; pants cap)".
  std::string sexpr() const {
    if (kind == Kind::Generator) return str();
    std::string out = kind == Kind::Compose ? "(;" : "(*";
    for (const auto& c : children) out += " " + c.sexpr();
    return out + ")";
  }
};

namespace detail {

inline const std::vector<std::string>& generators_for(int dim) {
  static const std::vector<std::string> one{"idP", "idQ", "ev", "coev", "swap"};
  static const std::vector<std::string> two{"id", "cup", "cap", "pants", "copants", "swap"};
  return dim == 1 ? one : two;
}

class Parser {
 public:
  Parser(std::string_view text, int dim) : s_(text), dim_(dim) {}

  CobordismExpr parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty cobordism expression", pos_);
    CobordismExpr e = seq();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CobordismExpr seq() {
    const std::size_t start = (skip(), pos_);
    std::vector<CobordismExpr> parts{par()};
    while (eat(';')) parts.push_back(par());
    if (parts.size() == 1) return std::move(parts.front());
    CobordismExpr e;
    e.kind = CobordismExpr::Kind::Compose;
    e.children = std::move(parts);
    e.position = start;
    return e;
  }

  CobordismExpr par() {
    const std::size_t start = (skip(), pos_);
    std::vector<CobordismExpr> parts{atom()};
    while (eat('*')) parts.push_back(atom());
    if (parts.size() == 1) return std::move(parts.front());
    CobordismExpr e;
    e.kind = CobordismExpr::Kind::Tensor;
    e.children = std::move(parts);
    e.position = start;
    return e;
  }

  CobordismExpr atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("expected a generator or '('", pos_);
    if (s_[pos_] == '(') {
      ++pos_;
      CobordismExpr e = seq();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string word(s_.substr(start, pos_ - start));
    const auto& gens = generators_for(dim_);
    if (std::find(gens.begin(), gens.end(), word) == gens.end()) {
      throw ParseError("unknown generator '" + word + "' in dimension " + std::to_string(dim_), start);
    }
    if (word != "id") return CobordismExpr::generator(word, start);
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '(') throw ParseError("expected '(' after id", pos_);
    ++pos_;
    skip();
    const std::size_t digits = pos_;
    std::size_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (n > 64) throw ParseError("id arity too large", digits);
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected a natural number in id(n)", pos_);
    if (!eat(')')) throw ParseError("expected ')' closing id(n)", pos_);
    return CobordismExpr::generator("id", start, n);
  }

  std::string_view s_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: expr := seq ; seq := par (";" par)* ; par := atom ("*" atom)* ;
/// atom := gen | "(" expr ")". Generators in dimension 2: id(n), cup, cap,
/// pants, copants, swap; in dimension 1: idP, idQ, ev, coev, swap.
inline CobordismExpr parse_cobordism(std::string_view text, int dim) {
  if (dim != 1 && dim != 2) throw ValidationError("cobordism dimension must be 1 or 2");
  return detail::Parser(text, dim).parse();
}

}  // namespace fieldwork::cobordism
