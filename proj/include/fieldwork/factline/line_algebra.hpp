#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fieldwork/algebras/structure_algebra.hpp"
#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/factline/intervals.hpp"

namespace fieldwork::factline {

using algebras::StructureConstantAlgebra;

/// Module over a structure-constant algebra given by one action matrix per
/// basis element. For a right module, m . e_i = actions[i] m; for a left
/// module, e_i . m = actions[i] m.
struct ModuleAction {
  enum class Side { Left, Right };

  Side side = Side::Left;
  std::vector<Matrix> actions;

  std::size_t dim() const { return actions.empty() ? 0 : actions.front().rows(); }

  /// Matrix by which a general algebra element acts.
  Matrix action_of(const Vector& a) const {
    Matrix out(dim(), dim());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      Matrix term = actions.at(i);
      term *= a[i];
      out += term;
    }
    return out;
  }
};

/// Checks shapes, that the unit acts as the identity, and compatibility
/// with the product (R_{ab} = R_b R_a on the right, L_{ab} = L_a L_b on the
/// left). Returns a description of the first failure.
inline std::optional<std::string> module_failure(const StructureConstantAlgebra& a, const ModuleAction& m) {
  const std::size_t d = a.dim();
  if (m.actions.size() != d) return "module needs one action matrix per basis element";
  const std::size_t n = m.dim();
  if (n == 0) return "module must be nonzero";
  for (const auto& x : m.actions) {
    if (x.rows() != n || x.cols() != n) return "module action matrices must be square of equal size";
  }
  if (!(m.action_of(a.unit()) == Matrix::identity(n))) return "unit does not act as the identity";
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix prod = m.action_of(a.basis_product(i, j));
      const Matrix expected = m.side == ModuleAction::Side::Right ? m.actions[j] * m.actions[i]
                                                                   : m.actions[i] * m.actions[j];
      if (!(prod == expected)) {
        return "action not compatible with product at (" + a.basis_names()[i] + "," + a.basis_names()[j] + ")";
      }
    }
  }
  return std::nullopt;
}

/// One-dimensional module on which basis element i acts by scalars[i].
inline ModuleAction scalar_module(ModuleAction::Side side, const std::vector<Rational>& scalars) {
  ModuleAction m;
  m.side = side;
  for (const auto& s : scalars) {
    Matrix x(1, 1);
    x(0, 0) = s;
    m.actions.push_back(x);
  }
  return m;
}

/// The factorization algebra on the line attached to an associative
/// algebra: every interval carries A and disjoint intervals multiply in
/// left-to-right order. Boundary modules are used for the closed interval.
class LineFactAlg {
 public:
  explicit LineFactAlg(StructureConstantAlgebra a) : a_(algebras::validated(std::move(a))) {}

  LineFactAlg(StructureConstantAlgebra a, ModuleAction left_end, ModuleAction right_end) : LineFactAlg(std::move(a)) {
    with_modules(std::move(left_end), std::move(right_end));
  }

  const StructureConstantAlgebra& algebra() const noexcept { return a_; }
  const std::optional<ModuleAction>& left_module() const noexcept { return left_; }
  const std::optional<ModuleAction>& right_module() const noexcept { return right_; }

  /// The left end module is a right A-module, the right end module a left one.
  void with_modules(ModuleAction left_end, ModuleAction right_end) {
    if (left_end.side != ModuleAction::Side::Right) throw ValidationError("left boundary module must be a right module");
    if (right_end.side != ModuleAction::Side::Left) throw ValidationError("right boundary module must be a left module");
    if (auto f = module_failure(a_, left_end)) throw ValidationError("left boundary module: " + *f);
    if (auto f = module_failure(a_, right_end)) throw ValidationError("right boundary module: " + *f);
    left_ = std::move(left_end);
    right_ = std::move(right_end);
  }

  /// Image of a tuple (one element per part, in tensor order) in F(ambient).
  Vector evaluate(const IntervalConfig& c, const std::vector<Vector>& elements) const {
    if (elements.size() != c.size()) throw ValidationError("one element per interval required");
    Vector out = a_.unit();
    for (auto i : c.spatial_order()) out = a_.multiply(out, elements[i]);
    return out;
  }

  /// Structure map A^{(x) k} -> A; the first tensor factor is most significant.
  Matrix structure_map(const IntervalConfig& c) const {
    const std::size_t d = a_.dim(), k = c.size();
    std::size_t cols = 1;
    for (std::size_t i = 0; i < k; ++i) {
      cols *= d;
      if (cols > 100000) throw ScaleError("structure map too large");
    }
    Matrix m(d, cols);
    std::vector<Vector> elements(k);
    for (std::size_t col = 0; col < cols; ++col) {
      std::size_t rest = col;
      for (std::size_t i = k; i-- > 0;) {
        elements[i] = unit_vector(d, rest % d);
        rest /= d;
      }
      const Vector v = evaluate(c, elements);
      for (std::size_t r = 0; r < d; ++r) m(r, col) = v[r];
    }
    return m;
  }

 private:
  StructureConstantAlgebra a_;
  std::optional<ModuleAction> left_;
  std::optional<ModuleAction> right_;
};

inline LineFactAlg factalg_from_algebra(const StructureConstantAlgebra& a) { return LineFactAlg(a); }

using StructureEvaluator = std::function<Vector(const IntervalConfig&, const std::vector<Vector>&)>;

struct PrefactorizationFailure {
  std::string nesting;
  std::vector<Vector> tuple;
  Vector composed;  // inner maps, then the outer map
  Vector direct;    // one-shot map
};

struct PrefactorizationReport {
  bool compatible = true;
  std::size_t tuples_checked = 0;
  std::optional<PrefactorizationFailure> failure;
};

/// Every tuple of basis vectors for the given arity.
inline std::vector<std::vector<Vector>> basis_tuples(std::size_t dim, std::size_t arity) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    count *= dim;
    if (count > 20000) throw ScaleError("too many basis tuples; pass explicit samples");
  }
  std::vector<std::vector<Vector>> out;
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<Vector> tuple(arity);
    std::size_t rest = t;
    for (std::size_t i = arity; i-- > 0;) {
      tuple[i] = unit_vector(dim, rest % dim);
      rest /= dim;
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

/// Compares "inner maps then outer map" with the one-shot map on each
/// sampled tuple. An empty sample list means all basis tuples.
inline PrefactorizationReport check_prefactorization_axioms(const StructureEvaluator& eval, std::size_t dim,
                                                            const NestedConfig& nested,
                                                            std::vector<std::vector<Vector>> samples = {}) {
  if (samples.empty()) samples = basis_tuples(dim, nested.arity());
  const IntervalConfig flat = nested.flattened();
  PrefactorizationReport report;
  for (const auto& tuple : samples) {
    if (tuple.size() != nested.arity()) throw ValidationError("sample tuple has wrong arity");
    std::vector<Vector> middle;
    std::size_t pos = 0;
    for (const auto& inner : nested.inner) {
      std::vector<Vector> part(tuple.begin() + static_cast<std::ptrdiff_t>(pos),
                               tuple.begin() + static_cast<std::ptrdiff_t>(pos + inner.size()));
      pos += inner.size();
      middle.push_back(eval(inner, part));
    }
    const Vector composed = eval(nested.outer, middle);
    const Vector direct = eval(flat, tuple);
    ++report.tuples_checked;
    if (composed != direct) {
      std::string nesting = nested.outer.str() + " with";
      for (const auto& inner : nested.inner) nesting += " " + inner.str();
      report.compatible = false;
      report.failure = PrefactorizationFailure{nesting, tuple, composed, direct};
      return report;
    }
  }
  return report;
}

inline PrefactorizationReport check_prefactorization_axioms(const LineFactAlg& f, const NestedConfig& nested,
                                                            std::vector<std::vector<Vector>> samples = {}) {
  return check_prefactorization_axioms(
      [&f](const IntervalConfig& c, const std::vector<Vector>& xs) { return f.evaluate(c, xs); }, f.algebra().dim(),
      nested, std::move(samples));
}

struct GlobalSections {
  std::size_t dimension = 0;
  std::vector<std::string> basis;  // representatives l_a (x) r_b spanning the quotient
};

/// M_l (x)_A M_r as the cokernel of M_l (x) A (x) M_r -> M_l (x) M_r,
/// (m, a, m') -> (m a) (x) m' - m (x) (a m').
inline GlobalSections interval_global_sections(const LineFactAlg& f) {
  if (!f.left_module() || !f.right_module()) throw ValidationError("closed interval needs both boundary modules");
  const auto& ml = *f.left_module();
  const auto& mr = *f.right_module();
  const std::size_t d = f.algebra().dim(), nl = ml.dim(), nr = mr.dim();
  Matrix rel(nl * nr, nl * d * nr);
  for (std::size_t a = 0; a < nl; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t b = 0; b < nr; ++b) {
        const std::size_t col = (a * d + i) * nr + b;
        for (std::size_t x = 0; x < nl; ++x) rel(x * nr + b, col) += ml.actions[i](x, a);
        for (std::size_t y = 0; y < nr; ++y) rel(a * nr + y, col) -= mr.actions[i](y, b);
      }
    }
  }
  GlobalSections out;
  for (auto idx : complement_of_column_space(rel)) {
    out.basis.push_back("l" + std::to_string(idx / nr) + "⊗r" + std::to_string(idx % nr));
  }
  out.dimension = out.basis.size();
  return out;
}

}  // namespace fieldwork::factline
