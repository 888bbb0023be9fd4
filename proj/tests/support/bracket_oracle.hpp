#pragma once

// Test-only Jones oracle: Kauffman bracket state sum over all 2^c
// smoothings, normalized by the writhe. Shares no code path with the
// skein recursion, so agreement with specialize_jones(homflypt(D)) checks
// the whole engine.

#include <map>
#include <set>
#include <vector>

#include "knotflow/diagram.hpp"
#include "knotflow/laurent.hpp"

namespace oracle {

// Bracket polynomial in the Kauffman variable A (exponents of A).
inline knotflow::LaurentPoly1H bracket(const knotflow::LinkDiagram& d) {
  using knotflow::LaurentPoly1H;
  const auto& xs = d.crossings();
  const int c = static_cast<int>(xs.size());

  std::vector<int> arcs;
  std::map<int, int> arc_index;
  for (const auto& comp : d.components())
    for (int a : comp) {
      arc_index[a] = static_cast<int>(arcs.size());
      arcs.push_back(a);
    }

  const LaurentPoly1H delta = LaurentPoly1H::mono(-1, 2) + LaurentPoly1H::mono(-1, -2);
  LaurentPoly1H total;

  for (int state = 0; state < (1 << c); ++state) {
    std::vector<int> parent(arcs.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    int a_power = 0;
    for (int k = 0; k < c; ++k) {
      const auto& x = xs[k];
      const bool oriented = (state >> k) & 1;
      if (oriented) {
        unite(arc_index.at(x.under_in), arc_index.at(x.over_out));
        unite(arc_index.at(x.over_in), arc_index.at(x.under_out));
      } else {
        unite(arc_index.at(x.under_in), arc_index.at(x.over_in));
        unite(arc_index.at(x.under_out), arc_index.at(x.over_out));
      }
      // Calibration: for a +1 crossing the oriented smoothing is the
      // A-smoothing; for a -1 crossing it is the B-smoothing.
      const bool counts_as_a = (x.sign > 0) == oriented;
      a_power += counts_as_a ? 1 : -1;
    }
    std::set<int> classes;
    for (size_t i = 0; i < parent.size(); ++i) classes.insert(find(static_cast<int>(i)));
    const int loops = static_cast<int>(classes.size()) + d.free_circle_count();

    LaurentPoly1H term = LaurentPoly1H::mono(1, a_power);
    for (int i = 1; i < loops; ++i) term = term * delta;
    total = total + term;
  }
  if (c == 0) {
    total = LaurentPoly1H::one();
    for (int i = 1; i < d.free_circle_count(); ++i) total = total * delta;
  }
  return total;
}

// Jones polynomial in s = t^(1/2): V = (-A)^(-3w) <D> with s = A^(-2).
inline knotflow::LaurentPoly1H bracket_jones(const knotflow::LinkDiagram& d) {
  using knotflow::LaurentPoly1H;
  const int w = d.writhe();
  LaurentPoly1H v = bracket(d) * LaurentPoly1H::mono((w % 2 == 0) ? 1 : -1, -3 * w);
  LaurentPoly1H in_s;
  for (const auto& [e, coeff] : v.terms()) {
    if (e % 2 != 0) throw knotflow::Error("bracket oracle: odd A-exponent");
    in_s.add_term(-e / 2, coeff);
  }
  return in_s;
}

}  // namespace oracle
