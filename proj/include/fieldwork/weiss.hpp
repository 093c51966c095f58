#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"

// Weiss covers and the Ran space on finite point sets. Points are referred to
// by index; subsets are sorted index lists.
namespace fieldwork::weiss {

using Subset = std::vector<std::size_t>;

struct FinitePointModel {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> coordinates;  // optional; empty or one per label

  FinitePointModel() = default;
  explicit FinitePointModel(std::vector<std::string> point_labels, std::vector<std::vector<long>> coords = {})
      : labels(std::move(point_labels)), coordinates(std::move(coords)) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw ValidationError("point labels must be distinct");
    if (!coordinates.empty() && coordinates.size() != labels.size()) {
      throw ValidationError("coordinates must be given for every point or none");
    }
  }

  /// Points labelled 1..n.
  static FinitePointModel numbered(std::size_t n) {
    std::vector<std::string> l;
    for (std::size_t i = 1; i <= n; ++i) l.push_back(std::to_string(i));
    return FinitePointModel(std::move(l));
  }

  /// Integer grid [lo, hi]^dim, points ordered lexicographically by coordinates
  /// and labelled "(x,y,...)".
  static FinitePointModel grid(long lo, long hi, std::size_t dim) {
    std::vector<std::vector<long>> coords{{}};
    for (std::size_t d = 0; d < dim; ++d) {
      std::vector<std::vector<long>> next;
      for (const auto& c : coords) {
        for (long v = lo; v <= hi; ++v) {
          auto x = c;
          x.push_back(v);
          next.push_back(std::move(x));
        }
      }
      coords = std::move(next);
    }
    std::vector<std::string> l;
    for (const auto& c : coords) {
      std::string s = "(";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
      l.push_back(s + ")");
    }
    return FinitePointModel(std::move(l), std::move(coords));
  }

  std::size_t size() const noexcept { return labels.size(); }

  std::size_t index_of(const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ValidationError("unknown point label " + label);
    return static_cast<std::size_t>(it - labels.begin());
  }

  std::string describe(const Subset& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + labels.at(s[i]);
    return out + "}";
  }
};

/// Nonempty family of nonempty member subsets.
class CoverFamily {
 public:
  CoverFamily(const FinitePointModel& m, std::vector<Subset> members) : n_(m.size()) {
    if (members.empty()) throw ValidationError("cover family must be nonempty");
    for (auto& s : members) {
      if (s.empty()) throw ValidationError("cover members must be nonempty");
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      std::vector<bool> bits(n_, false);
      for (auto p : s) {
        if (p >= n_) throw ValidationError("cover member refers to a point outside the model");
        bits[p] = true;
      }
      masks_.push_back(std::move(bits));
    }
    members_ = std::move(members);
  }

  const std::vector<Subset>& members() const noexcept { return members_; }

  bool member_contains(std::size_t member, const Subset& s) const {
    for (auto p : s) {
      if (!masks_[member][p]) return false;
    }
    return true;
  }

  /// First member containing s, if any.
  std::optional<std::size_t> covering_member(const Subset& s) const {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (member_contains(j, s)) return j;
    }
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::vector<Subset> members_;
  std::vector<std::vector<bool>> masks_;
};

/// Visits every subset of {0..n-1} of the given size in lexicographic order
/// until the visitor returns false.
template <class Visitor>
bool for_each_subset(std::size_t n, std::size_t size, Visitor&& visit) {
  if (size > n) return true;
  Subset s(size);
  for (std::size_t i = 0; i < size; ++i) s[i] = i;
  while (true) {
    if (!visit(static_cast<const Subset&>(s))) return false;
    std::size_t i = size;
    while (i > 0 && s[i - 1] == n - size + i - 1) --i;
    if (i == 0) return true;
    ++s[i - 1];
    for (std::size_t j = i; j < size; ++j) s[j] = s[j - 1] + 1;
  }
}

struct WeissResult {
  bool is_weiss = true;
  std::optional<Subset> witness;  // smallest size, then lexicographically first
};

/// True iff every subset of at most k points lies in a single member.
inline WeissResult is_weiss_cover(const FinitePointModel& m, const CoverFamily& c, std::size_t k) {
  if (k == 0) throw ValidationError("k must be positive");
  WeissResult r;
  for (std::size_t size = 1; size <= std::min(k, m.size()); ++size) {
    for_each_subset(m.size(), size, [&](const Subset& s) {
      if (c.covering_member(s)) return true;
      r.is_weiss = false;
      r.witness = s;
      return false;
    });
    if (!r.is_weiss) break;
  }
  return r;
}

/// All nonempty subsets of size <= k.
inline std::vector<Subset> ran_points(const FinitePointModel& m, std::size_t k) {
  std::vector<Subset> out;
  for (std::size_t size = 1; size <= std::min(k, m.size()); ++size) {
    for_each_subset(m.size(), size, [&](const Subset& s) {
      out.push_back(s);
      return true;
    });
  }
  return out;
}

struct RanCorrespondence {
  bool weiss = false;
  bool ran_covered = false;
  bool agree = false;
};

/// Compares the Weiss condition with "the sets Ran_{<=k}(U) cover
/// Ran_{<=k}(M)". The Ran side is built as a union of sets of subsets.
inline RanCorrespondence weiss_ran_correspondence(const FinitePointModel& m, const CoverFamily& c, std::size_t k) {
  RanCorrespondence r;
  r.weiss = is_weiss_cover(m, c, k).is_weiss;
  std::set<Subset> images;
  for (const auto& u : c.members()) {
    // Ran_{<=k}(U): subsets of U, built from positions within U
    for (std::size_t size = 1; size <= std::min(k, u.size()); ++size) {
      for_each_subset(u.size(), size, [&](const Subset& pos) {
        Subset s;
        for (auto p : pos) s.push_back(u[p]);
        images.insert(std::move(s));
        return true;
      });
    }
  }
  const auto all = ran_points(m, k);
  r.ran_covered = std::all_of(all.begin(), all.end(), [&](const Subset& s) { return images.count(s) > 0; });
  r.agree = r.weiss == r.ran_covered;
  return r;
}

/// Unions of at most j pairwise disjoint balls {q : |q - p|^2 <= radius^2}
/// around points of a model with coordinates.
inline std::vector<Subset> disjoint_ball_unions(const FinitePointModel& m, long radius, std::size_t j) {
  if (m.coordinates.empty()) throw ValidationError("ball families need point coordinates");
  std::vector<Subset> balls;
  for (std::size_t p = 0; p < m.size(); ++p) {
    Subset b;
    for (std::size_t q = 0; q < m.size(); ++q) {
      long d2 = 0;
      for (std::size_t i = 0; i < m.coordinates[p].size(); ++i) {
        const long diff = m.coordinates[p][i] - m.coordinates[q][i];
        d2 += diff * diff;
      }
      if (d2 <= radius * radius) b.push_back(q);
    }
    balls.push_back(std::move(b));
  }
  auto disjoint = [](const Subset& a, const Subset& b) {
    Subset both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.empty();
  };
  std::set<Subset> out;
  for (std::size_t count = 1; count <= j; ++count) {
    for_each_subset(balls.size(), count, [&](const Subset& pick) {
      Subset u;
      for (std::size_t a = 0; a < pick.size(); ++a) {
        for (std::size_t b = a + 1; b < pick.size(); ++b) {
          if (!disjoint(balls[pick[a]], balls[pick[b]])) return true;
        }
        u.insert(u.end(), balls[pick[a]].begin(), balls[pick[a]].end());
      }
      std::sort(u.begin(), u.end());
      out.insert(std::move(u));
      return true;
    });
  }
  return {out.begin(), out.end()};
}

}  // namespace fieldwork::weiss
