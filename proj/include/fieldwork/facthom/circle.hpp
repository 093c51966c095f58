#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/chain_complex.hpp"
#include "fieldwork/exactcore/group_action.hpp"
#include "fieldwork/exactcore/sparse.hpp"
#include "fieldwork/facthom/hochschild.hpp"

namespace fieldwork::facthom {

/// Chains on configurations of i points on the circle, as a complex of free
/// Q[S_i]-modules: C_1 = C_0 = Q[S_i] with d(e_sigma) = v_{sigma s} - v_sigma,
/// s the cyclic shift, and S_i acting by post-composition.
class CircleConfigModel {
 public:
  explicit CircleConfigModel(std::size_t weight) : weight_(weight) {
    if (weight == 0) throw ValidationError("weight must be positive");
    if (weight > 5) throw ScaleError("circle configuration model limited to weight 5");
    group_ = symmetric_group(weight);
    const Permutation s = Permutation::cyclic_shift(weight);
    boundary_ = Matrix(group_.size(), group_.size());
    for (std::size_t k = 0; k < group_.size(); ++k) {
      boundary_(index_of(group_[k] * s), k) += 1;
      boundary_(k, k) -= 1;
    }
  }

  std::size_t weight() const noexcept { return weight_; }
  const std::vector<Permutation>& group() const noexcept { return group_; }
  const Matrix& boundary() const noexcept { return boundary_; }

  std::size_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(group_.begin(), group_.end(), p);
    if (it == group_.end() || *it != p) throw InternalError("permutation outside the group");
    return static_cast<std::size_t>(it - group_.begin());
  }

  /// Post-composition by tau on either chain group.
  Matrix action(const Permutation& tau) const {
    Matrix m(group_.size(), group_.size());
    for (std::size_t k = 0; k < group_.size(); ++k) m(index_of(tau * group_[k]), k) = 1;
    return m;
  }

  ChainComplex complex() const { return ChainComplex({group_.size(), group_.size()}, {boundary_}); }

  /// Nonequivariant homology [H_0, H_1].
  std::vector<std::size_t> homology() const { return homology_dims(complex()); }

 private:
  std::size_t weight_;
  std::vector<Permutation> group_;
  Matrix boundary_;
};

inline CircleConfigModel circle_config_model(std::size_t weight) { return CircleConfigModel(weight); }

/// Dimensions indexed by (homological degree, weight).
struct WeightTable {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries;

  std::size_t at(std::size_t degree, std::size_t weight) const {
    auto it = entries.find({degree, weight});
    return it == entries.end() ? 0 : it->second;
  }

  /// (degree, weight, dimension), ordered by degree then weight.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (const auto& [k, v] : entries) out.emplace_back(k.first, k.second, v);
    return out;
  }

  friend bool operator==(const WeightTable&, const WeightTable&) = default;
};

namespace detail {

inline std::size_t int_pow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Digits of a word in base d, most significant letter first.
inline std::vector<std::size_t> word_digits(std::size_t index, std::size_t d, std::size_t length) {
  std::vector<std::size_t> w(length);
  for (std::size_t j = length; j-- > 0;) {
    w[j] = index % d;
    index /= d;
  }
  return w;
}

inline std::size_t word_index(const std::vector<std::size_t>& w, std::size_t d) {
  std::size_t r = 0;
  for (auto x : w) r = r * d + x;
  return r;
}

}  // namespace detail

/// Homology of C_*(Conf_i S^1) (x)_{S_i} V^{(x)i} in degrees 0 and 1, where
/// S_i acts diagonally: post-composition on the model and by permuting the
/// tensor factors. The action permutes the product basis, so the
/// coinvariants have the orbits as a basis.
inline std::vector<std::size_t> configuration_side(std::size_t dim_v, std::size_t weight) {
  if (weight == 0) return {1, 0};
  const CircleConfigModel model(weight);
  const auto& group = model.group();
  const std::size_t words = detail::int_pow(dim_v, weight);
  const std::size_t total = group.size() * words;
  auto act = [&](const Permutation& tau, std::size_t idx) {
    const std::size_t sigma = idx / words;
    const auto w = detail::word_digits(idx % words, dim_v, weight);
    std::vector<std::size_t> moved(weight);
    for (std::size_t j = 0; j < weight; ++j) moved[tau(j)] = w[j];
    return model.index_of(tau * group[sigma]) * words + detail::word_index(moved, dim_v);
  };
  const auto label = basis_orbits(total, group, act);
  const std::size_t orbits = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::size_t> representative(orbits, total);
  for (std::size_t idx = 0; idx < total; ++idx) representative[label[idx]] = std::min(representative[label[idx]], idx);

  const Matrix& dm = model.boundary();
  Matrix d(orbits, orbits);
  for (std::size_t o = 0; o < orbits; ++o) {
    const std::size_t idx = representative[o];
    const std::size_t sigma = idx / words, w = idx % words;
    for (std::size_t r = 0; r < group.size(); ++r) {
      if (!dm(r, sigma).is_zero()) d(label[r * words + w], o) += dm(r, sigma);
    }
  }
  return homology_dims(ChainComplex({orbits, orbits}, {d}));
}

/// Hochschild homology of the tensor algebra T(V), dim V = d, in one weight,
/// degrees 0..top-1. Weight is word length; every face map preserves it, so
/// restricting to one weight loses nothing.
inline std::vector<std::size_t> tensor_algebra_hochschild(std::size_t dim_v, std::size_t weight, std::size_t top) {
  std::vector<std::vector<std::size_t>> words{{}};
  for (std::size_t len = 1; len <= weight; ++len) {
    for (std::size_t k = 0; k < detail::int_pow(dim_v, len); ++k) words.push_back(detail::word_digits(k, dim_v, len));
  }
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> weights;
  for (std::size_t k = 0; k < words.size(); ++k) {
    index.emplace(words[k], k);
    weights.push_back(words[k].size());
  }
  std::vector<SparseVector> table(words.size() * words.size());
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      if (words[a].size() + words[b].size() > weight) continue;
      std::vector<std::size_t> w = words[a];
      w.insert(w.end(), words[b].begin(), words[b].end());
      table[a * words.size() + b].emplace(index.at(w), Rational(1));
    }
  }
  const std::size_t n = words.size();
  const WeightedBasis basis{weights, [&](std::size_t a, std::size_t b) -> const SparseVector& { return table[a * n + b]; }};
  auto h = cyclic_bar_complex(basis, top, weight).homology_dims();
  h.pop_back();
  return h;
}

struct FreeFactorizationComparison {
  WeightTable configuration;  // C_*(Conf_i S^1) (x)_{S_i} V^{(x)i}
  WeightTable hochschild;     // HH_*(T(V)) by weight
  bool agree = false;
};

/// Both sides of the free-algebra formula on the circle, for weights
/// 0..imax and homological degrees 0..2.
inline FreeFactorizationComparison free_factorization_homology_s1(std::size_t dim_v, std::size_t imax) {
  if (dim_v == 0 || imax == 0) throw ValidationError("dim V and imax must be positive");
  if (dim_v > 2 || imax > 4) throw ScaleError("free factorization homology limited to dim V <= 2, weight <= 4");
  constexpr std::size_t degrees = 3;
  FreeFactorizationComparison out;
  for (std::size_t i = 0; i <= imax; ++i) {
    const auto conf = configuration_side(dim_v, i);
    const auto hh = tensor_algebra_hochschild(dim_v, i, degrees);
    for (std::size_t k = 0; k < degrees; ++k) {
      out.configuration.entries[{k, i}] = k < conf.size() ? conf[k] : 0;
      out.hochschild.entries[{k, i}] = hh[k];
    }
  }
  out.agree = out.configuration == out.hochschild;
  return out;
}

}  // namespace fieldwork::facthom
