#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "knotflow/diagram.hpp"
#include "knotflow/errors.hpp"
#include "knotflow/laurent.hpp"
#include "knotflow/moves.hpp"

namespace knotflow {

struct SkeinConfig {
  int max_crossings = 24;  // recursion guard
  bool memo_enabled = true;
};

// Basepoints and a component order for the descending-diagram strategy.
struct SkeinOrdering {
  std::vector<int> component_order;  // permutation of component indices
  std::vector<int> basepoints;       // per component: offset into its arc sequence
};

inline SkeinOrdering default_ordering(const LinkDiagram& d) {
  SkeinOrdering ord;
  ord.component_order.resize(d.component_count());
  for (int i = 0; i < d.component_count(); ++i) ord.component_order[i] = i;
  ord.basepoints.assign(d.component_count(), 0);
  return ord;
}

template <typename Rng>
SkeinOrdering random_ordering(const LinkDiagram& d, Rng& rng) {
  SkeinOrdering ord = default_ordering(d);
  std::shuffle(ord.component_order.begin(), ord.component_order.end(), rng);
  for (int i = 0; i < d.component_count(); ++i) {
    const auto& comp = d.components()[i];
    if (!comp.empty())
      ord.basepoints[i] =
          std::uniform_int_distribution<int>(0, static_cast<int>(comp.size()) - 1)(rng);
  }
  return ord;
}

// First crossing reached on its under-strand before its over-strand when
// the components are traversed in the given order from their basepoints.
inline std::optional<int> first_bad_crossing(const LinkDiagram& d,
                                             const SkeinOrdering& ord) {
  if (static_cast<int>(ord.component_order.size()) != d.component_count() ||
      static_cast<int>(ord.basepoints.size()) != d.component_count())
    throw BadIndex("ordering does not match the diagram's components");
  const auto maps = detail::build_dart_maps(d.crossings());
  std::set<int> seen;
  for (int ci : ord.component_order) {
    if (ci < 0 || ci >= d.component_count())
      throw BadIndex("ordering references component " + std::to_string(ci));
    const auto& comp = d.components()[ci];
    if (comp.empty()) continue;
    const int len = static_cast<int>(comp.size());
    const int base = ((ord.basepoints[ci] % len) + len) % len;
    for (int k = 0; k < len; ++k) {
      const int arc = comp[(base + k) % len];
      const auto& dart = maps.in_dart.at(arc);
      const Crossing& x = d.crossings()[dart.crossing];
      if (!seen.insert(x.id).second) continue;
      if (dart.slot == detail::kUnderIn) return x.id;
    }
  }
  return std::nullopt;
}

inline bool is_descending(const LinkDiagram& d, const SkeinOrdering& ord) {
  return !first_bad_crossing(d, ord).has_value();
}

// delta^(n-1) with delta = (a^-1 - a) z^-1: the value of the n-component
// unlink forced by the skein relation and the unknot normalization.
inline LaurentPoly2 unlink_value(int n) {
  if (n < 1) throw BadIndex("unlink_value needs at least one component");
  const LaurentPoly2 delta =
      LaurentPoly2::mono(1, -1, -1) + LaurentPoly2::mono(-1, 1, -1);
  LaurentPoly2 r = LaurentPoly2::one();
  for (int i = 1; i < n; ++i) r = r * delta;
  return r;
}

namespace detail {

inline LaurentPoly2 homflypt_rec(const LinkDiagram& d, const SkeinConfig& cfg,
                                 const SkeinOrdering& ord,
                                 std::map<std::string, LaurentPoly2>& memo) {
  if (d.crossing_count() > cfg.max_crossings)
    throw RecursionBudgetExceeded("diagram has " + std::to_string(d.crossing_count()) +
                                  " crossings, budget is " +
                                  std::to_string(cfg.max_crossings));
  std::string key;
  if (cfg.memo_enabled) {
    key = d.canonical_key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  LaurentPoly2 value;
  const auto bad = first_bad_crossing(d, ord);
  if (!bad) {
    // Descending diagrams are ambient-isotopic to unlinks.
    value = unlink_value(d.component_count());
  } else {
    const Crossing& x = d.crossing_by_id(*bad);
    const LinkDiagram switched = switch_crossing(d, *bad);
    const LinkDiagram smoothed = smooth_crossing(d, *bad);
    const LaurentPoly2 p_switched =
        homflypt_rec(switched, cfg, default_ordering(switched), memo);
    const LaurentPoly2 p_smoothed =
        homflypt_rec(smoothed, cfg, default_ordering(smoothed), memo);
    if (x.sign > 0) {
      // Solve a^-1 P(L+) - a P(L-) = z P(L0) for P(L+).
      value = LaurentPoly2::mono(1, 2, 0) * p_switched +
              LaurentPoly2::mono(1, 1, 1) * p_smoothed;
    } else {
      // ... and for P(L-).
      value = LaurentPoly2::mono(1, -2, 0) * p_switched +
              LaurentPoly2::mono(-1, -1, 1) * p_smoothed;
    }
  }
  if (cfg.memo_enabled) memo[key] = value;
  return value;
}

}  // namespace detail

inline LaurentPoly2 homflypt(const LinkDiagram& d, const SkeinConfig& cfg = {},
                             std::optional<SkeinOrdering> ordering = std::nullopt) {
  std::map<std::string, LaurentPoly2> memo;
  const SkeinOrdering ord = ordering ? *ordering : default_ordering(d);
  return detail::homflypt_rec(d, cfg, ord, memo);
}

// Exact check of the skein relation at one crossing of d.
inline bool verify_skein(const LinkDiagram& d, int crossing_id,
                         const SkeinConfig& cfg = {}) {
  const Crossing& x = d.crossing_by_id(crossing_id);
  const LinkDiagram partner = switch_crossing(d, crossing_id);
  const LinkDiagram& l_plus = x.sign > 0 ? d : partner;
  const LinkDiagram& l_minus = x.sign > 0 ? partner : d;
  const LinkDiagram l_zero = smooth_crossing(d, crossing_id);
  const LaurentPoly2 lhs = LaurentPoly2::mono(1, -1, 0) * homflypt(l_plus, cfg) +
                           LaurentPoly2::mono(-1, 1, 0) * homflypt(l_minus, cfg) +
                           LaurentPoly2::mono(-1, 0, 1) * homflypt(l_zero, cfg);
  return lhs.is_zero();
}

// Jones specialization: a -> s^2, z -> s - s^-1 (that is alpha = t,
// z = t^(1/2) - t^(-1/2) with s = t^(1/2)).
inline LaurentPoly1H specialize_jones(const LaurentPoly2& p) {
  const LaurentPoly1H z_image =
      LaurentPoly1H::mono(1, 1) + LaurentPoly1H::mono(-1, -1);
  return specialize(p, 2, z_image);
}

// Trivializing specialization z -> a^-1 - a (with a -> s); collapses the
// polynomial of every link to 1.
inline LaurentPoly1H specialize_trivial(const LaurentPoly2& p) {
  const LaurentPoly1H z_image =
      LaurentPoly1H::mono(1, -1) + LaurentPoly1H::mono(-1, 1);
  return specialize(p, 1, z_image);
}

}  // namespace knotflow
