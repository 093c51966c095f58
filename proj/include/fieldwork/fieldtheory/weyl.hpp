#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/rational.hpp"
#include "fieldwork/fieldtheory/polynomial.hpp"

namespace fieldwork::fieldtheory {

/// Exponents (a, b, c) of the normal-ordered monomial q^a p^b hbar^c.
using WeylMonomial = std::array<unsigned, 3>;

enum class WeylLetter { P, Q, Hbar };

/// Element of the Weyl algebra Q[hbar]<p, q> / ([p, q] = hbar), stored in
/// normal order (q before p, hbar central).
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement monomial(unsigned qa, unsigned pb, unsigned hc = 0, const Rational& coeff = 1) {
    WeylElement w;
    w.add({qa, pb, hc}, coeff);
    return w;
  }
  static WeylElement one() { return monomial(0, 0); }
  static WeylElement p() { return monomial(0, 1); }
  static WeylElement q() { return monomial(1, 0); }
  static WeylElement hbar() { return monomial(0, 0, 1); }

  void add(const WeylMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<WeylMonomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_hbar_free() const {
    for (const auto& [m, c] : terms_) {
      if (m[2] != 0) return false;
    }
    return true;
  }

  /// Smallest power of hbar among the terms (~0u for the zero element).
  unsigned min_hbar_power() const {
    unsigned best = ~0u;
    for (const auto& [m, c] : terms_) best = std::min(best, m[2]);
    return best;
  }

  WeylElement& operator+=(const WeylElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const Rational& s, const WeylElement& w) {
    WeylElement out;
    for (const auto& [m, c] : w.terms_) out.add(m, s * c);
    return out;
  }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// e.g. "4*hbar*q*p + 2*hbar^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // order by hbar power, then by decreasing q, p degree
    std::vector<std::pair<WeylMonomial, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      const auto& a = x.first;
      const auto& b = y.first;
      if (a[2] != b[2]) return a[2] < b[2];
      if (a[0] + a[1] != b[0] + b[1]) return a[0] + a[1] > b[0] + b[1];
      return a[0] > b[0];
    });
    for (const auto& [m, c] : sorted) {
      std::string mono;
      auto put = [&](const char* name, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      put("hbar", m[2]);
      put("q", m[0]);
      put("p", m[1]);
      const Rational mag = c.sign() < 0 ? -c : c;
      std::string term = mono.empty() ? mag.str() : (mag == Rational(1) ? mono : mag.str() + "*" + mono);
      if (out.empty()) {
        out = c.sign() < 0 ? "-" + term : term;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  std::map<WeylMonomial, Rational> terms_;
};

namespace detail {

inline Rational falling_factorial(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= Rational(static_cast<long>(n - i));
  return r;
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return falling_factorial(n, k) / falling_factorial(k, k);
}

}  // namespace detail

/// Product in normal order, using
/// p^b q^c = sum_k C(b,k) c(c-1)...(c-k+1) hbar^k q^{c-k} p^{b-k}.
inline WeylElement weyl_product(const WeylElement& x, const WeylElement& y) {
  WeylElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const unsigned b = mx[1], c = my[0];
      for (unsigned k = 0; k <= std::min(b, c); ++k) {
        const Rational coeff = cx * cy * detail::binomial(b, k) * detail::falling_factorial(c, k);
        out.add({mx[0] + c - k, b - k + my[1], mx[2] + my[2] + k}, coeff);
      }
    }
  }
  return out;
}

inline WeylElement weyl_commutator(const WeylElement& x, const WeylElement& y) {
  return weyl_product(x, y) - weyl_product(y, x);
}

inline WeylElement weyl_power(const WeylElement& x, unsigned n) {
  WeylElement out = WeylElement::one();
  for (unsigned i = 0; i < n; ++i) out = weyl_product(out, x);
  return out;
}

/// Normal form of a word by literal rewriting: hbar letters are pulled out,
/// then the leftmost "p q" is replaced by "q p" + hbar (deleted pair) until
/// no "p q" remains.
inline WeylElement weyl_normal_form(const std::vector<WeylLetter>& word) {
  unsigned h = 0;
  std::vector<WeylLetter> letters;
  for (auto l : word) {
    if (l == WeylLetter::Hbar) {
      ++h;
    } else {
      letters.push_back(l);
    }
  }
  std::map<std::vector<WeylLetter>, WeylElement> memo;
  auto rec = [&](auto&& self, const std::vector<WeylLetter>& w) -> WeylElement {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::size_t pos = 0;
    while (pos + 1 < w.size() && !(w[pos] == WeylLetter::P && w[pos + 1] == WeylLetter::Q)) ++pos;
    WeylElement result;
    if (pos + 1 >= w.size()) {
      // no "p q": the word is q^a p^b already
      unsigned a = 0, b = 0;
      for (auto l : w) (l == WeylLetter::Q ? a : b) += 1;
      result = WeylElement::monomial(a, b);
    } else {
      std::vector<WeylLetter> swapped = w;
      std::swap(swapped[pos], swapped[pos + 1]);
      std::vector<WeylLetter> shorter = w;
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(pos),
                    shorter.begin() + static_cast<std::ptrdiff_t>(pos + 2));
      result = self(self, swapped);
      const WeylElement contracted = self(self, shorter);
      for (const auto& [m, c] : contracted.terms()) result.add({m[0], m[1], m[2] + 1}, c);
    }
    memo.emplace(w, result);
    return result;
  };
  WeylElement base = rec(rec, letters);
  WeylElement out;
  for (const auto& [m, c] : base.terms()) out.add({m[0], m[1], m[2] + h}, c);
  return out;
}

/// Reads words such as "p q", "p^2 q^2", "q*p*hbar" or "pqh". Letters:
/// p, q, and h / hbar for the central parameter.
inline std::vector<WeylLetter> parse_weyl_word(std::string_view text) {
  std::vector<WeylLetter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    WeylLetter letter;
    if (ch == 'p') {
      letter = WeylLetter::P;
      ++i;
    } else if (ch == 'q') {
      letter = WeylLetter::Q;
      ++i;
    } else if (text.substr(i, 4) == "hbar") {
      letter = WeylLetter::Hbar;
      i += 4;
    } else if (ch == 'h') {
      letter = WeylLetter::Hbar;
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in Weyl word", start);
    }
    unsigned power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t digits = i;
      unsigned value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > 64) throw ParseError("exponent too large", digits);
        ++i;
      }
      if (i == digits) throw ParseError("missing exponent after '^'", digits);
      power = value;
    }
    out.insert(out.end(), power, letter);
  }
  return out;
}

/// Classical image of an hbar-free element in Q[p, q] (variable 0 = p,
/// variable 1 = q).
inline Polynomial classical_image(const WeylElement& w) {
  Polynomial out(2);
  for (const auto& [m, c] : w.terms()) {
    if (m[2] != 0) throw ValidationError("classical image needs an hbar-free element");
    out.add({m[1], m[0]}, c);
  }
  return out;
}

/// Normal-ordered symbol of a commutative polynomial in p, q.
inline WeylElement weyl_symbol(const Polynomial& f) {
  if (f.nvars() != 2) throw ValidationError("Poisson polynomials have two variables p, q");
  WeylElement out;
  for (const auto& [e, c] : f.terms()) out.add({e[1], e[0], 0}, c);
  return out;
}

/// Sets hbar = 0.
inline WeylElement hbar_zero(const WeylElement& w) {
  WeylElement out;
  for (const auto& [m, c] : w.terms()) {
    if (m[2] == 0) out.add(m, c);
  }
  return out;
}

}  // namespace fieldwork::fieldtheory
