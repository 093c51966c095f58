#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/rational.hpp"

namespace fieldwork::fieldtheory {

using Exponent = std::vector<unsigned>;

/// Polynomial in a fixed number of commuting variables with rational
/// coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add(Exponent(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    Polynomial p(nvars);
    p.add(e, 1);
    return p;
  }

  static Polynomial monomial(Exponent e, const Rational& c = 1) {
    Polynomial p(e.size());
    p.add(e, c);
    return p;
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Exponent& e, const Rational& c) {
    if (e.size() != n_) throw ValidationError("exponent length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
  }

  /// Largest total degree of a term; 0 for the zero polynomial.
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
      if (total(e) != d) return false;
    }
    return true;
  }

  static std::size_t total(const Exponent& e) {
    std::size_t s = 0;
    for (auto x : e) s += x;
    return s;
  }

  Polynomial derivative(std::size_t i) const {
    if (i >= n_) throw ValidationError("variable index out of range");
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent f = e;
      --f[i];
      out.add(f, c * Rational(static_cast<long>(e[i])));
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Polynomial out(p.n_);
    for (const auto& [e, c] : p.terms_) out.add(e, s * c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form using the given variable names, e.g. "3*x^2 - y".
  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      const Rational mag = c.sign() < 0 ? -c : c;
      std::string term;
      if (mono.empty()) {
        term = mag.str();
      } else {
        term = mag == Rational(1) ? mono : mag.str() + "*" + mono;
      }
      if (out.empty()) {
        out = c.sign() < 0 ? "-" + term : term;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.n_ != n_) throw ValidationError("polynomials in different numbers of variables");
  }

  std::size_t n_;
  std::map<Exponent, Rational> terms_;
};

inline std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return out;
}

/// All exponent vectors in n variables of total degree d, lexicographically
/// decreasing (x^d first).
inline std::vector<Exponent> monomials_of_degree(std::size_t n, std::size_t d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == n) {
      cur[i] = static_cast<unsigned>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      cur[i] = static_cast<unsigned>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace fieldwork::fieldtheory
