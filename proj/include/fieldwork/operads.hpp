#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/group_action.hpp"
#include "fieldwork/exactcore/linalg.hpp"

// Operads at the level of sets: symmetric sequences with explicit action
// tables, the associative operad as orderings, Eckmann-Hilton, and a grid
// model of configuration space components.
namespace fieldwork::operads {

/// Component of the little intervals in arity k: the left-to-right order of
/// the k labelled intervals, stored as the list of labels 0..k-1.
class AssocOperadElement {
 public:
  explicit AssocOperadElement(std::vector<std::size_t> order) : order_(std::move(order)) {
    Permutation check(order_);  // validates
    (void)check;
  }

  static AssocOperadElement identity(std::size_t k) {
    std::vector<std::size_t> o(k);
    for (std::size_t i = 0; i < k; ++i) o[i] = i;
    return AssocOperadElement(std::move(o));
  }

  std::size_t arity() const noexcept { return order_.size(); }
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  /// 1-based, e.g. "(3,2,1)".
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < order_.size(); ++i) s += (i ? "," : "") + std::to_string(order_[i] + 1);
    return s + ")";
  }

  friend bool operator==(const AssocOperadElement&, const AssocOperadElement&) = default;
  friend auto operator<=>(const AssocOperadElement&, const AssocOperadElement&) = default;

 private:
  std::vector<std::size_t> order_;
};

/// Block substitution. Inner i acts on the i-th consecutive block of labels;
/// the blocks are then laid out in the order given by the outer element.
inline AssocOperadElement compose_assoc(const AssocOperadElement& outer, const std::vector<AssocOperadElement>& inners) {
  if (inners.size() != outer.arity()) {
    throw ValidationError("composition needs " + std::to_string(outer.arity()) + " inner operations, got " +
                          std::to_string(inners.size()));
  }
  std::vector<std::size_t> offset(inners.size() + 1, 0);
  for (std::size_t i = 0; i < inners.size(); ++i) offset[i + 1] = offset[i] + inners[i].arity();
  std::vector<std::size_t> out;
  for (auto block : outer.order()) {
    for (auto x : inners[block].order()) out.push_back(offset[block] + x);
  }
  return AssocOperadElement(std::move(out));
}

/// All k! elements of arity k, lexicographic.
inline std::vector<AssocOperadElement> assoc_elements(std::size_t k) {
  std::vector<AssocOperadElement> out;
  for (const auto& p : symmetric_group(k)) out.emplace_back(p.images());
  return out;
}

/// Arity k of a set-valued symmetric sequence: named elements and, for each
/// permutation of symmetric_group(k) (in that order), where it sends each
/// element.
struct SymmetricSequenceArity {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> action;
};

class SetSymmetricSequence {
 public:
  explicit SetSymmetricSequence(std::map<std::size_t, SymmetricSequenceArity> arities) : arities_(std::move(arities)) {
    for (const auto& [k, a] : arities_) {
      if (auto why = action_failure(k, a)) throw ValidationError("arity " + std::to_string(k) + ": " + *why);
    }
  }

  const std::map<std::size_t, SymmetricSequenceArity>& arities() const noexcept { return arities_; }

  const SymmetricSequenceArity& at(std::size_t k) const {
    auto it = arities_.find(k);
    if (it == arities_.end()) throw ValidationError("symmetric sequence has no arity " + std::to_string(k));
    return it->second;
  }

  /// Checks the table is an action: identity fixes everything and
  /// (gh).x = g.(h.x).
  static std::optional<std::string> action_failure(std::size_t k, const SymmetricSequenceArity& a) {
    const auto group = symmetric_group(k);
    if (a.action.size() != group.size()) return "action table needs one row per permutation";
    const std::size_t n = a.elements.size();
    for (const auto& row : a.action) {
      if (row.size() != n) return "action row has wrong length";
      for (auto x : row) {
        if (x >= n) return "action sends an element outside the set";
      }
    }
    auto index = [&](const Permutation& g) {
      return static_cast<std::size_t>(std::find(group.begin(), group.end(), g) - group.begin());
    };
    for (std::size_t x = 0; x < n; ++x) {
      if (a.action[index(Permutation::identity(k))][x] != x) return "identity does not act trivially";
    }
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      for (std::size_t hi = 0; hi < group.size(); ++hi) {
        const std::size_t ghi = index(group[gi] * group[hi]);
        for (std::size_t x = 0; x < n; ++x) {
          if (a.action[ghi][x] != a.action[gi][a.action[hi][x]]) return "table is not compatible with composition";
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::map<std::size_t, SymmetricSequenceArity> arities_;
};

/// pi_0 of the little intervals: orderings, permuted by relabelling.
inline SetSymmetricSequence assoc_sequence(std::size_t max_arity) {
  std::map<std::size_t, SymmetricSequenceArity> ar;
  for (std::size_t k = 0; k <= max_arity; ++k) {
    SymmetricSequenceArity a;
    const auto elems = assoc_elements(k);
    for (const auto& e : elems) a.elements.push_back(e.str());
    for (const auto& g : symmetric_group(k)) {
      std::vector<std::size_t> row;
      for (const auto& e : elems) {
        std::vector<std::size_t> relabelled;
        for (auto x : e.order()) relabelled.push_back(g(x));
        row.push_back(static_cast<std::size_t>(std::find(elems.begin(), elems.end(), AssocOperadElement(relabelled)) -
                                               elems.begin()));
      }
      a.action.push_back(std::move(row));
    }
    ar.emplace(k, std::move(a));
  }
  return SetSymmetricSequence(std::move(ar));
}

/// One point in every arity (the commutative operad).
inline SetSymmetricSequence comm_sequence(std::size_t max_arity) {
  std::map<std::size_t, SymmetricSequenceArity> ar;
  for (std::size_t k = 0; k <= max_arity; ++k) {
    SymmetricSequenceArity a;
    a.elements = {"*"};
    a.action.assign(symmetric_group(k).size(), {0});
    ar.emplace(k, std::move(a));
  }
  return SetSymmetricSequence(std::move(ar));
}

/// dim of (Q[O(k)] (x) V^{(x) k}) coinvariants under S_k: the arity-k part of
/// the free O-algebra on a vector space of dimension dim_v.
inline std::size_t free_algebra_component_dim(const SetSymmetricSequence& seq, std::size_t k, std::size_t dim_v) {
  const auto& a = seq.at(k);
  const auto group = symmetric_group(k);
  std::size_t tensor_dim = 1;
  for (std::size_t i = 0; i < k; ++i) tensor_dim *= dim_v;
  const std::size_t n = a.elements.size();
  const std::size_t total = n * tensor_dim;
  if (total > 500) throw ScaleError("free algebra component too large");
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = idx % dim_v;
      idx /= dim_v;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (auto x : d) idx = idx * dim_v + x;
    return idx;
  };
  std::map<Permutation, std::size_t> row_of;
  for (std::size_t i = 0; i < group.size(); ++i) row_of.emplace(group[i], i);
  GroupAction action(group, total, [&](const Permutation& g) {
    Matrix m(total, total);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t t = 0; t < tensor_dim; ++t) {
        // g moves tensor factor i to position g(i)
        const auto d = digits(t);
        std::vector<std::size_t> moved(k);
        for (std::size_t i = 0; i < k; ++i) moved[g(i)] = d[i];
        m(a.action[row_of.at(g)][x] * tensor_dim + encode(moved), x * tensor_dim + t) = 1;
      }
    }
    return m;
  });
  return group_coinvariants(action);
}

// ---------------------------------------------------------------------------
// Eckmann-Hilton

struct DoubleMonoidTable {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> first;   // a . b
  std::vector<std::vector<std::size_t>> second;  // a o b
  std::size_t first_unit = 0;
  std::size_t second_unit = 0;
  std::vector<std::string> names;                // optional element names

  void validate() const {
    if (size == 0 || size > 6) throw ValidationError("carrier size must be between 1 and 6");
    for (const auto* t : {&first, &second}) {
      if (t->size() != size) throw ValidationError("operation table has wrong number of rows");
      for (const auto& row : *t) {
        if (row.size() != size) throw ValidationError("operation table row has wrong length");
        for (auto x : row) {
          if (x >= size) throw ValidationError("operation table not closed on the carrier");
        }
      }
    }
    if (first_unit >= size || second_unit >= size) throw ValidationError("unit outside the carrier");
    if (!names.empty() && names.size() != size) throw ValidationError("one name per carrier element required");
  }
};

enum class EckmannHiltonVerdict { NotUnital, NoInterchange, ForcedCommutativeEqual };

inline const char* verdict_name(EckmannHiltonVerdict v) {
  switch (v) {
    case EckmannHiltonVerdict::NotUnital:
      return "not_unital";
    case EckmannHiltonVerdict::NoInterchange:
      return "no_interchange";
    case EckmannHiltonVerdict::ForcedCommutativeEqual:
      return "forced_commutative_equal";
  }
  return "unknown";
}

struct EckmannHiltonResult {
  EckmannHiltonVerdict verdict;
  std::optional<std::size_t> failing_operation;  // 1 or 2 for not_unital
  std::optional<std::size_t> unit_witness;       // element x with e*x != x or x*e != x
  std::optional<std::array<std::size_t, 4>> quadruple;
};

/// Checks the units, then (a o b) . (c o d) = (a . c) o (b . d) on every
/// quadruple. When both hold the two operations must coincide and be
/// associative and commutative; if they do not, InternalError is thrown.
inline EckmannHiltonResult eckmann_hilton_check(const DoubleMonoidTable& t) {
  t.validate();
  const std::size_t n = t.size;
  const auto& dot = t.first;
  const auto& circ = t.second;
  for (std::size_t op = 1; op <= 2; ++op) {
    const auto& tab = op == 1 ? dot : circ;
    const std::size_t e = op == 1 ? t.first_unit : t.second_unit;
    for (std::size_t x = 0; x < n; ++x) {
      if (tab[e][x] != x || tab[x][e] != x) {
        return {EckmannHiltonVerdict::NotUnital, op, x, std::nullopt};
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (dot[circ[a][b]][circ[c][d]] != circ[dot[a][c]][dot[b][d]]) {
            return {EckmannHiltonVerdict::NoInterchange, std::nullopt, std::nullopt, std::array{a, b, c, d}};
          }
        }
      }
    }
  }
  if (t.first_unit != t.second_unit) throw InternalError("interchange holds but the units differ");
  if (dot != circ) throw InternalError("interchange holds but the operations differ");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (dot[a][b] != dot[b][a]) throw InternalError("interchange holds but the operation is not commutative");
      for (std::size_t c = 0; c < n; ++c) {
        if (dot[dot[a][b]][c] != dot[a][dot[b][c]]) throw InternalError("interchange holds but not associative");
      }
    }
  }
  return {EckmannHiltonVerdict::ForcedCommutativeEqual, std::nullopt, std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Configuration spaces

/// Connected components of k distinct points on an 11-wide grid in R^n
/// (n in {1, 2}); two configurations are adjacent when one point moves one
/// step along an axis and the points stay distinct.
inline std::size_t conf_components(std::size_t n, std::size_t k) {
  if (n < 1 || n > 2) throw ValidationError("conf_components supports dimensions 1 and 2");
  if (k < 1 || k > 4) throw ValidationError("conf_components supports 1 to 4 points");
  constexpr std::size_t width = 11;
  const std::size_t cells = n == 1 ? width : width * width;
  std::size_t states = 1;
  for (std::size_t i = 0; i < k; ++i) states *= cells;
  std::vector<bool> seen(states, false);
  auto decode = [&](std::size_t s, std::array<std::size_t, 4>& pts) {
    for (std::size_t i = k; i-- > 0;) {
      pts[i] = s % cells;
      s /= cells;
    }
  };
  auto encode = [&](const std::array<std::size_t, 4>& pts) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < k; ++i) s = s * cells + pts[i];
    return s;
  };
  auto distinct = [&](const std::array<std::size_t, 4>& pts) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (pts[i] == pts[j]) return false;
      }
    }
    return true;
  };
  std::size_t components = 0;
  std::array<std::size_t, 4> pts{};
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < states; ++start) {
    if (seen[start]) continue;
    decode(start, pts);
    if (!distinct(pts)) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t s = stack.back();
      stack.pop_back();
      decode(s, pts);
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t cell = pts[i];
        const std::size_t x = cell % width, y = cell / width;
        std::array<std::size_t, 4> moves{};
        std::size_t count = 0;
        if (x > 0) moves[count++] = cell - 1;
        if (x + 1 < width) moves[count++] = cell + 1;
        if (n == 2 && y > 0) moves[count++] = cell - width;
        if (n == 2 && y + 1 < width) moves[count++] = cell + width;
        for (std::size_t m = 0; m < count; ++m) {
          bool free = true;
          for (std::size_t j = 0; j < k; ++j) free = free && (j == i || pts[j] != moves[m]);
          if (!free) continue;
          auto next = pts;
          next[i] = moves[m];
          const std::size_t ns = encode(next);
          if (!seen[ns]) {
            seen[ns] = true;
            stack.push_back(ns);
          }
        }
      }
    }
  }
  return components;
}

}  // namespace fieldwork::operads
