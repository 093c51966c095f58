#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fieldwork/algebras/catalog.hpp"
#include "fieldwork/algebras/structure_algebra.hpp"
#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/exactcore/matrix.hpp"

namespace fieldwork::vertex {

using algebras::StructureConstantAlgebra;

/// Finite Laurent polynomial in z with d x d matrix coefficients. Zero
/// coefficients are not stored.
class LaurentField {
 public:
  explicit LaurentField(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::map<int, Matrix>& terms() const noexcept { return terms_; }

  Matrix coefficient(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? Matrix(dim_, dim_) : it->second;
  }

  void add(int power, const Matrix& m, const Rational& scale = 1) {
    if (m.rows() != dim_ || m.cols() != dim_) throw ValidationError("field coefficient has wrong shape");
    auto [it, inserted] = terms_.try_emplace(power, dim_, dim_);
    it->second += scale * m;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::optional<int> min_power() const {
    return terms_.empty() ? std::nullopt : std::optional<int>(terms_.begin()->first);
  }
  std::optional<int> max_power() const {
    return terms_.empty() ? std::nullopt : std::optional<int>(terms_.rbegin()->first);
  }

  /// d/dz, coefficientwise.
  LaurentField derivative() const {
    LaurentField out(dim_);
    for (const auto& [p, m] : terms_) {
      if (p != 0) out.add(p - 1, m, Rational(p));
    }
    return out;
  }

  friend bool operator==(const LaurentField&, const LaurentField&) = default;

 private:
  std::size_t dim_;
  std::map<int, Matrix> terms_;
};

/// State space Q^d with vacuum, shift T, and one field Y(e_i, z) per basis
/// vector, all powers inside [-K, K]. Fields are taken to be complete in
/// negative powers; positive powers above K are treated as truncated away.
class VertexData {
 public:
  VertexData(Vector vacuum, Matrix shift, std::vector<LaurentField> fields, int truncation)
      : vacuum_(std::move(vacuum)), shift_(std::move(shift)), fields_(std::move(fields)), k_(truncation) {
    const std::size_t d = vacuum_.size();
    if (d == 0) throw ValidationError("state space must be nonzero");
    if (is_zero(vacuum_)) throw ValidationError("vacuum vector must be nonzero");
    if (k_ < 0) throw ValidationError("truncation order must be nonnegative");
    if (shift_.rows() != d || shift_.cols() != d) throw ValidationError("shift matrix has wrong shape");
    if (fields_.size() != d) throw ValidationError("need one field per basis vector");
    for (const auto& f : fields_) {
      if (f.dim() != d) throw ValidationError("field has wrong dimension");
      if (f.min_power() && (*f.min_power() < -k_ || *f.max_power() > k_)) {
        throw ValidationError("field power outside [-K, K]");
      }
    }
  }

  std::size_t dim() const noexcept { return vacuum_.size(); }
  int truncation() const noexcept { return k_; }
  const Vector& vacuum() const noexcept { return vacuum_; }
  const Matrix& shift() const noexcept { return shift_; }
  const std::vector<LaurentField>& fields() const noexcept { return fields_; }

  /// Y(v, z) by linearity.
  LaurentField field(const Vector& v) const {
    if (v.size() != dim()) throw ValidationError("state has wrong length");
    LaurentField out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (v[i].is_zero()) continue;
      for (const auto& [p, m] : fields_[i].terms()) out.add(p, m, v[i]);
    }
    return out;
  }

 private:
  Vector vacuum_;
  Matrix shift_;
  std::vector<LaurentField> fields_;
  int k_;
};

/// A commutative algebra with a derivation T, checked on all basis pairs.
class DerivationRing {
 public:
  DerivationRing(StructureConstantAlgebra r, Matrix t) : r_(algebras::validated(std::move(r))), t_(std::move(t)) {
    const std::size_t d = r_.dim();
    if (t_.rows() != d || t_.cols() != d) throw ValidationError("derivation matrix has wrong shape");
    if (auto f = r_.first_commutativity_failure()) {
      throw ValidationError("ring is not commutative: " + f->describe(r_.basis_names()));
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vector ei = unit_vector(d, i), ej = unit_vector(d, j);
        const Vector lhs = t_.apply(r_.basis_product(i, j));
        const Vector rhs = r_.multiply(t_.apply(ei), ej) + r_.multiply(ei, t_.apply(ej));
        if (lhs != rhs) {
          throw ValidationError("Leibniz rule fails on (" + r_.basis_names()[i] + ", " + r_.basis_names()[j] + ")");
        }
      }
    }
  }

  const StructureConstantAlgebra& ring() const noexcept { return r_; }
  const Matrix& derivation() const noexcept { return t_; }

 private:
  StructureConstantAlgebra r_;
  Matrix t_;
};

/// Q[t]/(t^m) with the derivation determined by T(t) = image, an element
/// of the ring given in the basis 1, t, ..., t^{m-1}: T(t^k) = k t^{k-1} T(t).
inline DerivationRing truncated_polynomial_derivation(std::size_t m, const Vector& image_of_t) {
  const auto r = algebras::catalog::truncated_polynomial(m);
  if (image_of_t.size() != m) throw ValidationError("image of t has wrong length");
  Matrix t(m, m);
  for (std::size_t k = 1; k < m; ++k) {
    const Vector col = Rational(static_cast<long>(k)) * r.multiply(unit_vector(m, k - 1), image_of_t);
    for (std::size_t i = 0; i < m; ++i) t(i, k) = col[i];
  }
  return DerivationRing(r, t);
}

/// t d/dt on Q[t]/(t^m); d/dt itself is not a derivation there once m >= 2.
inline DerivationRing euler_ring(std::size_t m) {
  Vector image(m);
  if (m > 1) image[1] = 1;
  return truncated_polynomial_derivation(m, image);
}

inline std::vector<DerivationRing> bundled_derivation_rings() {
  std::vector<DerivationRing> out;
  for (std::size_t m = 1; m <= 4; ++m) out.push_back(euler_ring(m));
  out.push_back(truncated_polynomial_derivation(3, Vector{0, 0, 1}));  // T(t) = t^2
  out.push_back(truncated_polynomial_derivation(4, Vector{0, 1, 1, 0}));
  out.emplace_back(algebras::catalog::split_pair(), Matrix(2, 2));
  return out;
}

/// Y(u, z)v = sum_{m=0}^{K} z^m/m! (T^m u) v; vacuum the unit, shift T.
inline VertexData vertex_from_comm_ring(const DerivationRing& r, int truncation) {
  if (truncation < 0) throw ValidationError("truncation order must be nonnegative");
  const auto& ring = r.ring();
  const std::size_t d = ring.dim();
  std::vector<LaurentField> fields;
  for (std::size_t i = 0; i < d; ++i) {
    LaurentField f(d);
    Vector u = unit_vector(d, i);
    Rational factorial = 1;
    for (int m = 0; m <= truncation; ++m) {
      if (m > 0) {
        u = r.derivation().apply(u);
        factorial *= Rational(m);
      }
      f.add(m, ring.left_multiplication(u), Rational(1) / factorial);
    }
    fields.push_back(std::move(f));
  }
  return VertexData(ring.unit(), r.derivation(), std::move(fields), truncation);
}

/// The state-field map Y(u, z)v = uv with no z-dependence. Fails the
/// translation axiom whenever T is nonzero.
inline VertexData vertex_from_comm_ring_uncorrected(const DerivationRing& r, int truncation) {
  const auto& ring = r.ring();
  std::vector<LaurentField> fields;
  for (std::size_t i = 0; i < ring.dim(); ++i) {
    LaurentField f(ring.dim());
    f.add(0, ring.left_multiplication(unit_vector(ring.dim(), i)));
    fields.push_back(std::move(f));
  }
  return VertexData(ring.unit(), r.derivation(), std::move(fields), truncation);
}

struct PowerWindow {
  int lo = 0;
  int hi = 0;

  bool empty() const noexcept { return lo > hi; }
  std::string str() const { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }
};

struct VertexReport {
  int truncation = 0;
  bool vacuum = false;
  std::string vacuum_failure;
  bool translation = false;
  PowerWindow translation_window;  // powers of z where the identity was checked
  std::string translation_failure;
  bool locality = false;
  std::optional<std::size_t> locality_n;  // max over pairs of the minimal N
  PowerWindow locality_window;            // window used at that N, in both z and w
  std::string locality_failure;

  bool all_pass() const noexcept { return vacuum && translation && locality; }
};

namespace detail {

inline std::string mode(const std::string& what, std::size_t i, int p) {
  return what + " of e" + std::to_string(i) + " at z^" + std::to_string(p);
}

}  // namespace detail

/// Y(vacuum, z) = id, and Y(e_i, z) vacuum = e_i + O(z) for every basis vector.
inline std::optional<std::string> vacuum_failure(const VertexData& v) {
  const std::size_t d = v.dim();
  const LaurentField y = v.field(v.vacuum());
  LaurentField id(d);
  id.add(0, Matrix::identity(d));
  if (!(y == id)) return "Y(vacuum, z) is not the identity";
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& [p, m] : v.fields()[i].terms()) {
      const Vector image = m.apply(v.vacuum());
      if (p < 0 && !is_zero(image)) return detail::mode("negative power", i, p) + " does not kill the vacuum";
    }
    if (v.fields()[i].coefficient(0).apply(v.vacuum()) != unit_vector(d, i)) {
      return "Y(e" + std::to_string(i) + ", 0) vacuum != e" + std::to_string(i);
    }
  }
  return std::nullopt;
}

/// [T, Y_p] = (p+1) Y_{p+1} for p in [-K, window-1], and T vacuum = 0.
/// With window = K this is every power the truncation determines.
inline std::optional<std::string> translation_failure(const VertexData& v, int window) {
  const Matrix& t = v.shift();
  if (!is_zero(t.apply(v.vacuum()))) return "T vacuum != 0";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const auto& f = v.fields()[i];
    for (int p = -v.truncation(); p <= window - 1; ++p) {
      const Matrix yp = f.coefficient(p);
      const Matrix lhs = t * yp - yp * t;
      const Matrix rhs = Rational(p + 1) * f.coefficient(p + 1);
      if (lhs != rhs) return detail::mode("[T, Y] != dY/dz", i, p);
    }
  }
  return std::nullopt;
}

/// Coefficients of (z-w)^N [Y(u, z), Y(u', w)] vanish at every bidegree
/// (a, b) with a, b in [-K+N, K], the range whose coefficients only involve
/// stored modes.
inline bool locality_holds(const VertexData& v, std::size_t i, std::size_t j, std::size_t n) {
  const int k = v.truncation();
  const int lo = -k + static_cast<int>(n);
  const auto& fz = v.fields()[i];
  const auto& fw = v.fields()[j];
  std::map<std::pair<int, int>, Matrix> commutator;
  for (const auto& [p, a] : fz.terms()) {
    for (const auto& [q, b] : fw.terms()) {
      Matrix c = a * b - b * a;
      if (!c.is_zero()) commutator.emplace(std::make_pair(p, q), std::move(c));
    }
  }
  std::vector<Rational> binom(n + 1, 1);
  for (std::size_t r = 1; r <= n; ++r) binom[r] = binom[r - 1] * Rational(static_cast<long>(n - r + 1), static_cast<long>(r));
  for (int a = lo; a <= k; ++a) {
    for (int b = lo; b <= k; ++b) {
      Matrix total(v.dim(), v.dim());
      // (z - w)^N = sum_r C(N, r) z^{N-r} (-w)^r
      for (std::size_t r = 0; r <= n; ++r) {
        auto it = commutator.find({a - static_cast<int>(n - r), b - static_cast<int>(r)});
        if (it == commutator.end()) continue;
        total += (r % 2 ? -binom[r] : binom[r]) * it->second;
      }
      if (!total.is_zero()) return false;
    }
  }
  return true;
}

inline VertexReport check_vertex_axioms(const VertexData& v, std::size_t nmax) {
  VertexReport out;
  out.truncation = v.truncation();
  if (auto f = vacuum_failure(v)) {
    out.vacuum_failure = *f;
  } else {
    out.vacuum = true;
  }
  out.translation_window = {-v.truncation(), v.truncation() - 1};
  if (auto f = translation_failure(v, v.truncation())) {
    out.translation_failure = *f;
  } else {
    out.translation = true;
  }
  std::size_t worst = 0;
  out.locality = true;
  for (std::size_t i = 0; i < v.dim() && out.locality; ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) {
      std::size_t n = 0;
      while (n <= nmax && !locality_holds(v, i, j, n)) ++n;
      if (n > nmax) {
        out.locality = false;
        out.locality_failure = "no N <= " + std::to_string(nmax) + " for (e" + std::to_string(i) + ", e" +
                               std::to_string(j) + ")";
        break;
      }
      worst = std::max(worst, n);
    }
  }
  if (out.locality) {
    out.locality_n = worst;
    out.locality_window = {-v.truncation() + static_cast<int>(worst), v.truncation()};
  }
  return out;
}

class NegativePowersPresent : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Inverse construction for fields without negative powers: u v is the z^0
/// coefficient of Y(u, z) v, the unit is the vacuum, the derivation is T.
inline DerivationRing comm_ring_from_vertex(const VertexData& v) {
  const std::size_t d = v.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (auto p = v.fields()[i].min_power(); p && *p < 0) {
      throw NegativePowersPresent("NegativePowersPresent: Y(e" + std::to_string(i) + ", z) has a z^" +
                                  std::to_string(*p) + " term");
    }
  }
  StructureConstantAlgebra::Constants c(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix y0 = v.fields()[i].coefficient(0);
    for (std::size_t j = 0; j < d; ++j) c[i][j] = y0.column(j);
  }
  StructureConstantAlgebra r(algebras::default_basis_names(d), c, v.vacuum());
  if (auto f = algebras::first_axiom_failure(r)) throw ValidationError("z^0 products: " + f->describe(r.basis_names()));
  return DerivationRing(std::move(r), v.shift());
}

/// Two fields pairing through a truncated delta function. On the basis e, g, h_{-K}, ..., h_{K-1},
///   Y(e, z) = sum_p z^p |g><h_p|,  Y(g, w) = sum_q w^q |h_{-1-q}><e|,
/// so [Y(e, z), Y(g, w)] = sum_p z^p w^{-1-p} |g><e|, and locality needs N = 1.
inline VertexData truncated_delta_example(int truncation) {
  if (truncation < 1) throw ValidationError("truncation order must be positive");
  const int k = truncation;
  const std::size_t d = 2 + 2 * static_cast<std::size_t>(k);
  auto h = [k](int p) { return static_cast<std::size_t>(2 + p + k); };
  std::vector<LaurentField> fields(d, LaurentField(d));
  for (int p = -k; p <= k - 1; ++p) {
    Matrix a(d, d), b(d, d);
    a(1, h(p)) = 1;       // |g><h_p|
    b(h(-1 - p), 0) = 1;  // |h_{-1-p}><e|
    fields[0].add(p, a);
    fields[1].add(p, b);
  }
  return VertexData(unit_vector(d, 0), Matrix(d, d), std::move(fields), k);
}

}  // namespace fieldwork::vertex
