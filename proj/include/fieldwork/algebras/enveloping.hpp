#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fieldwork/algebras/lie.hpp"

namespace fieldwork::algebras {

/// Ordered monomial x_{i_1} x_{i_2} ... with i_1 <= i_2 <= ...
using PBWMonomial = std::vector<std::size_t>;

/// Finite linear combination of ordered monomials in U(g).
class PBWElement {
 public:
  PBWElement() = default;

  static PBWElement monomial(PBWMonomial m, Rational coeff = 1) {
    PBWElement e;
    e.add(std::move(m), coeff);
    return e;
  }

  void add(const PBWMonomial& m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const PBWElement& other, const Rational& scale = 1) {
    for (const auto& [m, c] : other.terms_) add(m, c * scale);
  }

  const std::map<PBWMonomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string word;
      for (auto i : m) word += (word.empty() ? "" : "*") + names.at(i);
      if (word.empty()) word = "1";
      const bool unit_coeff = c == Rational(1) || c == Rational(-1);
      std::string term = unit_coeff ? word : c.str() + "*" + word;
      if (unit_coeff && c.sign() < 0) term = "-" + term;
      if (out.empty()) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  friend bool operator==(const PBWElement&, const PBWElement&) = default;

 private:
  std::map<PBWMonomial, Rational> terms_;
};

/// Rewrites words in the generators of g into PBW normal form using
/// x_j x_i -> x_i x_j + [x_j, x_i] for j > i, always at the leftmost descent.
/// Results are memoized per word, so repeated products stay cheap.
class Straightener {
 public:
  explicit Straightener(LieAlgebra g) : g_(validated(std::move(g))) {}

  const LieAlgebra& lie() const noexcept { return g_; }

  const PBWElement& normal_form(const std::vector<std::size_t>& word) {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    for (auto i : word) {
      if (i >= g_.dim()) throw ValidationError("generator index out of range");
    }
    PBWElement result;
    std::size_t pos = 0;
    while (pos + 1 < word.size() && word[pos] <= word[pos + 1]) ++pos;
    if (pos + 1 >= word.size()) {
      result = PBWElement::monomial(word);
    } else {
      const std::size_t hi = word[pos], lo = word[pos + 1];
      std::vector<std::size_t> swapped = word;
      std::swap(swapped[pos], swapped[pos + 1]);
      result.add(normal_form(swapped));
      for (std::size_t k = 0; k < g_.dim(); ++k) {
        const Rational& coeff = g_.constant(hi, lo, k);
        if (coeff.is_zero()) continue;
        std::vector<std::size_t> shorter(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
        shorter.push_back(k);
        shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + 2), word.end());
        result.add(normal_form(shorter), coeff);
      }
    }
    return memo_.emplace(word, std::move(result)).first->second;
  }

  PBWElement product(const PBWElement& a, const PBWElement& b) {
    PBWElement out;
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        std::vector<std::size_t> word = ma;
        word.insert(word.end(), mb.begin(), mb.end());
        out.add(normal_form(word), ca * cb);
      }
    }
    return out;
  }

 private:
  LieAlgebra g_;
  std::map<std::vector<std::size_t>, PBWElement> memo_;
};

/// PBW normal form of a word of generator indices. The truncation bounds the
/// admissible word length; rewriting never lengthens a word, so every term of
/// the result also respects it.
inline PBWElement uea_normal_form(const LieAlgebra& g, std::span<const std::size_t> word, std::size_t truncation) {
  if (truncation == 0) throw ValidationError("truncation must be positive");
  if (word.size() > truncation) throw ValidationError("word longer than the truncation degree");
  Straightener s(g);
  return s.normal_form(std::vector<std::size_t>(word.begin(), word.end()));
}

}  // namespace fieldwork::algebras
