#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fieldwork/algebras/structure_algebra.hpp"
#include "fieldwork/exactcore/chain_complex.hpp"

namespace fieldwork::algebras {

/// [x_i, x_j] = sum_k f[i][j][k] x_k. The constructor checks shapes only.
class LieAlgebra {
 public:
  using Constants = std::vector<std::vector<Vector>>;

  LieAlgebra(std::vector<std::string> basis_names, const Constants& constants)
      : dim_(basis_names.size()), names_(std::move(basis_names)) {
    if (dim_ == 0) throw ValidationError("Lie algebra dimension must be positive");
    if (constants.size() != dim_) throw ValidationError("structure constants: wrong outer length");
    f_.resize(dim_ * dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (constants[i].size() != dim_) throw ValidationError("structure constants: wrong middle length");
      for (std::size_t j = 0; j < dim_; ++j) {
        if (constants[i][j].size() != dim_) throw ValidationError("structure constants: wrong inner length");
        for (std::size_t k = 0; k < dim_; ++k) f_[(i * dim_ + j) * dim_ + k] = constants[i][j][k];
      }
    }
  }

  static LieAlgebra abelian(std::size_t dim) {
    return LieAlgebra(default_basis_names(dim, "x"), Constants(dim, std::vector<Vector>(dim, Vector(dim))));
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return f_[(i * dim_ + j) * dim_ + k]; }

  Vector bracket(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
    return v;
  }

  Vector bracket(const Vector& a, const Vector& b) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        out = out + (a[i] * b[j]) * bracket(i, j);
      }
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Rational> f_;
};

/// Antisymmetry on all pairs (including [x_i, x_i] = 0), then Jacobi on all
/// triples.
inline std::optional<AxiomFailure> first_axiom_failure(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (g.constant(i, j, k) != -g.constant(j, i, k)) return AxiomFailure{AxiomFailure::Kind::Antisym, {i, j, 0}};
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Vector x = unit_vector(d, i), y = unit_vector(d, j), z = unit_vector(d, k);
        const Vector jacobi = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        if (!is_zero(jacobi)) return AxiomFailure{AxiomFailure::Kind::Jacobi, {i, j, k}};
      }
    }
  }
  return std::nullopt;
}

inline LieAlgebra validated(LieAlgebra g) {
  if (auto failure = first_axiom_failure(g)) throw AxiomError(*failure, g.basis_names());
  return g;
}

/// Strictly increasing index lists of a given size, in lexicographic order.
inline std::vector<std::vector<std::size_t>> sorted_subsets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

inline std::map<std::vector<std::size_t>, std::size_t> index_of(const std::vector<std::vector<std::size_t>>& basis) {
  std::map<std::vector<std::size_t>, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Sign of moving `k` to the front of the sorted list `rest`, and the sorted
// result; nullopt when k is already present (the wedge vanishes).
inline std::optional<std::pair<int, std::vector<std::size_t>>> wedge_front(std::size_t k,
                                                                           const std::vector<std::size_t>& rest) {
  std::size_t pos = 0;
  while (pos < rest.size() && rest[pos] < k) ++pos;
  if (pos < rest.size() && rest[pos] == k) return std::nullopt;
  std::vector<std::size_t> merged = rest;
  merged.insert(merged.begin() + static_cast<std::ptrdiff_t>(pos), k);
  return std::make_pair(pos % 2 == 0 ? 1 : -1, std::move(merged));
}

}  // namespace detail

/// Chevalley-Eilenberg chain complex on the exterior algebra of g with
/// d(x_{i_1} ^ ... ^ x_{i_p}) = sum_{a<b} (-1)^{a+b} [x_{i_a}, x_{i_b}] ^ (rest).
inline ChainComplex ce_chain_complex(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> dims;
  std::vector<Matrix> differentials;
  for (std::size_t p = 0; p <= n; ++p) dims.push_back(sorted_subsets(n, p).size());
  for (std::size_t p = 1; p <= n; ++p) {
    const auto source = sorted_subsets(n, p);
    const auto target_index = detail::index_of(sorted_subsets(n, p - 1));
    Matrix d(dims[p - 1], dims[p]);
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto& wedge = source[col];
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a + 1; b < p; ++b) {
          std::vector<std::size_t> rest;
          for (std::size_t t = 0; t < p; ++t) {
            if (t != a && t != b) rest.push_back(wedge[t]);
          }
          const int prefactor = (a + b) % 2 == 0 ? 1 : -1;
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& coeff = g.constant(wedge[a], wedge[b], k);
            if (coeff.is_zero()) continue;
            auto moved = detail::wedge_front(k, rest);
            if (!moved) continue;
            d(target_index.at(moved->second), col) += Rational(prefactor * moved->first) * coeff;
          }
        }
      }
    }
    differentials.push_back(std::move(d));
  }
  return ChainComplex(std::move(dims), std::move(differentials));
}

inline std::vector<std::size_t> ce_complex_homology(const LieAlgebra& g) {
  return homology_dims(ce_chain_complex(validated(g)));
}

/// Cohomology of the dual complex on the exterior algebra of g^*, with the
/// coboundary built directly from
/// (delta phi)(x_0, ..., x_p) = sum_{a<b} (-1)^{a+b} phi([x_a, x_b], x_0, ..^a..^b.., x_p).
/// Entry p is dim H^p.
inline std::vector<std::size_t> ce_cochain_cohomology(const LieAlgebra& raw) {
  const LieAlgebra g = validated(raw);
  const std::size_t n = g.dim();
  std::vector<std::size_t> ranks(n + 2, 0);  // ranks[p] = rank delta_p : C^p -> C^{p+1}
  std::vector<Matrix> deltas;
  std::vector<std::size_t> dims(n + 1);
  for (std::size_t p = 0; p <= n; ++p) dims[p] = sorted_subsets(n, p).size();
  for (std::size_t p = 0; p + 1 <= n; ++p) {
    const auto cochains = sorted_subsets(n, p);
    const auto cochain_index = detail::index_of(cochains);
    const auto arguments = sorted_subsets(n, p + 1);
    // Row = argument tuple I (a basis (p+1)-cochain), column = basis p-cochain J.
    Matrix delta(arguments.size(), cochains.size());
    for (std::size_t row = 0; row < arguments.size(); ++row) {
      const auto& args = arguments[row];
      for (std::size_t a = 0; a < args.size(); ++a) {
        for (std::size_t b = a + 1; b < args.size(); ++b) {
          std::vector<std::size_t> rest;
          for (std::size_t t = 0; t < args.size(); ++t) {
            if (t != a && t != b) rest.push_back(args[t]);
          }
          const int prefactor = (a + b) % 2 == 0 ? 1 : -1;
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& coeff = g.constant(args[a], args[b], k);
            if (coeff.is_zero()) continue;
            auto moved = detail::wedge_front(k, rest);
            if (!moved) continue;
            delta(row, cochain_index.at(moved->second)) += Rational(prefactor * moved->first) * coeff;
          }
        }
      }
    }
    ranks[p] = rank(delta);
    deltas.push_back(std::move(delta));
  }
  for (std::size_t p = 0; p + 1 < deltas.size(); ++p) {
    if (!(deltas[p + 1] * deltas[p]).is_zero()) throw InternalError("CE coboundary squares to a nonzero map");
  }
  std::vector<std::size_t> out(n + 1);
  for (std::size_t p = 0; p <= n; ++p) out[p] = dims[p] - ranks[p] - (p == 0 ? 0 : ranks[p - 1]);
  return out;
}

}  // namespace fieldwork::algebras
