#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/rational.hpp"

namespace fieldwork::factline {

/// Open interval (a, b) with rational endpoints.
struct Interval {
  Rational a;
  Rational b;

  Interval() = default;
  Interval(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
    if (!(a < b)) throw ValidationError("interval endpoints must satisfy a < b");
  }

  bool contains(const Interval& o) const { return a <= o.a && o.b <= b; }
  bool disjoint(const Interval& o) const { return b <= o.a || o.b <= a; }
  Interval reflected() const { return Interval(-b, -a); }

  std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Pairwise disjoint parts inside one ambient interval. The order of `parts`
/// is the order of the tensor factors; spatial order is computed.
class IntervalConfig {
 public:
  IntervalConfig(std::vector<Interval> parts, Interval ambient) : parts_(std::move(parts)), ambient_(ambient) {
    if (parts_.empty()) throw ValidationError("interval configuration needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!ambient_.contains(parts_[i])) {
        throw ValidationError("interval " + parts_[i].str() + " not contained in " + ambient_.str());
      }
      for (std::size_t j = i + 1; j < parts_.size(); ++j) {
        if (!parts_[i].disjoint(parts_[j])) {
          throw ValidationError("intervals " + parts_[i].str() + " and " + parts_[j].str() + " overlap");
        }
      }
    }
  }

  const std::vector<Interval>& parts() const noexcept { return parts_; }
  const Interval& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return parts_.size(); }

  /// Indices of the parts sorted left to right.
  std::vector<std::size_t> spatial_order() const {
    std::vector<std::size_t> idx(parts_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return parts_[x].a < parts_[y].a; });
    return idx;
  }

  /// Mirror image under x -> -x, parts kept in the same tensor order.
  IntervalConfig reflected() const {
    std::vector<Interval> r;
    for (const auto& p : parts_) r.push_back(p.reflected());
    return IntervalConfig(std::move(r), ambient_.reflected());
  }

  IntervalConfig permuted(const std::vector<std::size_t>& order) const {
    std::vector<Interval> r;
    for (auto i : order) r.push_back(parts_.at(i));
    return IntervalConfig(std::move(r), ambient_);
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + parts_[i].str();
    return s + "] in " + ambient_.str();
  }

 private:
  std::vector<Interval> parts_;
  Interval ambient_;
};

/// Three levels U_{i,j} inside V_i inside W.
struct NestedConfig {
  IntervalConfig outer;               // the V_i inside W
  std::vector<IntervalConfig> inner;  // inner[i]: the U_{i,j} inside V_i

  NestedConfig(IntervalConfig outer_config, std::vector<IntervalConfig> inner_configs)
      : outer(std::move(outer_config)), inner(std::move(inner_configs)) {
    if (inner.size() != outer.size()) throw ValidationError("one inner configuration per outer interval required");
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (!(inner[i].ambient() == outer.parts()[i])) {
        throw ValidationError("inner configuration " + std::to_string(i) + " does not sit in its outer interval");
      }
    }
  }

  /// All U_{i,j} directly inside W, in tensor order (i, then j).
  IntervalConfig flattened() const {
    std::vector<Interval> all;
    for (const auto& c : inner) all.insert(all.end(), c.parts().begin(), c.parts().end());
    return IntervalConfig(std::move(all), outer.ambient());
  }

  std::size_t arity() const {
    std::size_t n = 0;
    for (const auto& c : inner) n += c.size();
    return n;
  }
};

}  // namespace fieldwork::factline
