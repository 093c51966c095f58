#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fieldwork/cobordism/syntax.hpp"
#include "fieldwork/error.hpp"

namespace fieldwork::cobordism {

class BoundaryMismatch : public ValidationError {
 public:
  BoundaryMismatch(std::string left, std::string right, std::size_t position)
      : ValidationError("BoundaryMismatch: target " + left + " does not match source " + right + " at offset " +
                        std::to_string(position)),
        left_(std::move(left)),
        right_(std::move(right)),
        position_(position) {}

  const std::string& left() const noexcept { return left_; }
  const std::string& right() const noexcept { return right_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string left_;
  std::string right_;
  std::size_t position_;
};

/// A boundary: a number of circles (dimension 2) or an ordered list of
/// oriented points (dimension 1). In dimension 1 each point is P, Q or an
/// unresolved orientation variable introduced by swap.
struct Boundary {
  static constexpr int P = 0;
  static constexpr int Q = 1;  // variables are >= 2

  int dim = 2;
  std::size_t circles = 0;
  std::vector<int> points;

  std::size_t size() const { return dim == 2 ? circles : points.size(); }

  std::string str() const {
    if (dim == 2) return std::to_string(circles);
    std::string out = "(";
    for (std::size_t i = 0; i < points.size(); ++i) {
      out += i ? "," : "";
      out += points[i] == P ? "P" : points[i] == Q ? "Q" : "?" + std::to_string(points[i] - 2);
    }
    return out + ")";
  }

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

struct CobordismType {
  Boundary source;
  Boundary target;
};

namespace detail {

class Typer {
 public:
  explicit Typer(int dim) : dim_(dim) {}

  CobordismType run(const CobordismExpr& e) {
    CobordismType t = infer(e);
    t.source = resolve(t.source);
    t.target = resolve(t.target);
    // name the remaining variables 0, 1, ... in order of appearance
    std::map<int, int> rename;
    for (auto* b : {&t.source, &t.target}) {
      for (auto& p : b->points) {
        if (p < 2) continue;
        auto [it, inserted] = rename.emplace(p, static_cast<int>(rename.size()) + 2);
        p = it->second;
      }
    }
    return t;
  }

 private:
  Boundary circles(std::size_t n) const {
    Boundary b;
    b.dim = 2;
    b.circles = n;
    return b;
  }
  Boundary points(std::vector<int> p) const {
    Boundary b;
    b.dim = 1;
    b.points = std::move(p);
    return b;
  }

  int fresh() { return next_var_++; }

  int find(int v) {
    while (v >= 2) {
      auto it = subst_.find(v);
      if (it == subst_.end()) break;
      v = it->second;
    }
    return v;
  }

  Boundary resolve(Boundary b) {
    for (auto& p : b.points) p = find(p);
    return b;
  }

  bool unify(const Boundary& a, const Boundary& b) {
    if (a.dim == 2) return a.circles == b.circles;
    if (a.points.size() != b.points.size()) return false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      const int x = find(a.points[i]), y = find(b.points[i]);
      if (x == y) continue;
      if (x < 2 && y < 2) return false;
      if (x >= 2) {
        subst_[x] = y;
      } else {
        subst_[y] = x;
      }
    }
    return true;
  }

  CobordismType infer(const CobordismExpr& e) {
    using K = CobordismExpr::Kind;
    if (e.kind == K::Generator) return generator(e);
    if (e.kind == K::Tensor) {
      CobordismType t = infer(e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        const CobordismType u = infer(e.children[i]);
        if (dim_ == 2) {
          t.source.circles += u.source.circles;
          t.target.circles += u.target.circles;
        } else {
          t.source.points.insert(t.source.points.end(), u.source.points.begin(), u.source.points.end());
          t.target.points.insert(t.target.points.end(), u.target.points.begin(), u.target.points.end());
        }
      }
      return t;
    }
    CobordismType t = infer(e.children.front());
    for (std::size_t i = 1; i < e.children.size(); ++i) {
      const CobordismType u = infer(e.children[i]);
      if (!unify(t.target, u.source)) {
        throw BoundaryMismatch(resolve(t.target).str(), resolve(u.source).str(), e.children[i].position);
      }
      t.target = u.target;
    }
    return t;
  }

  CobordismType generator(const CobordismExpr& e) {
    const std::string& g = e.name;
    if (dim_ == 2) {
      if (g == "id") return {circles(e.arg), circles(e.arg)};
      if (g == "cup") return {circles(0), circles(1)};
      if (g == "cap") return {circles(1), circles(0)};
      if (g == "pants") return {circles(2), circles(1)};
      if (g == "copants") return {circles(1), circles(2)};
      if (g == "swap") return {circles(2), circles(2)};
    } else {
      constexpr int P = Boundary::P, Q = Boundary::Q;
      if (g == "idP") return {points({P}), points({P})};
      if (g == "idQ") return {points({Q}), points({Q})};
      if (g == "ev") return {points({P, Q}), points({})};
      if (g == "coev") return {points({}), points({P, Q})};
      if (g == "swap") {
        const int a = fresh(), b = fresh();
        return {points({a, b}), points({b, a})};
      }
    }
    throw InternalError("generator without a type: " + g);
  }

  int dim_;
  int next_var_ = 2;
  std::map<int, int> subst_;
};

}  // namespace detail

/// Source and target boundary of a parsed expression. In dimension 1, swap
/// is polymorphic in the orientations of the two points it exchanges;
/// orientations left open by the expression are reported as ?0, ?1, ...
inline CobordismType typecheck(const CobordismExpr& e, int dim) {
  if (dim != 1 && dim != 2) throw ValidationError("cobordism dimension must be 1 or 2");
  return detail::Typer(dim).run(e);
}

}  // namespace fieldwork::cobordism
