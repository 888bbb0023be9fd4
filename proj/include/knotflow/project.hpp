#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "knotflow/diagram.hpp"
#include "knotflow/errors.hpp"
#include "knotflow/geometry.hpp"

namespace knotflow {

// Combinatorial diagram of the xy-projection of a geometric link. The
// projection must be regular: transversal double points only, away from
// segment endpoints, with distinct heights. Components keep their input
// order; crossing ids follow discovery order.
inline LinkDiagram project_diagram(const FramedGeometricLink& link) {
  struct Passage {
    int segment;
    double t;
    int crossing_id;
    bool over;
  };
  struct Event {
    int curve_a, seg_a;
    int curve_b, seg_b;
    double ta, tb;
    int sign;
    bool a_over;
  };

  const auto& comps = link.components;
  std::vector<Event> events;

  auto cross2 = [](double ax, double ay, double bx, double by) {
    return ax * by - ay * bx;
  };

  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    comps[ci].validate();
    for (int cj = ci; cj < static_cast<int>(comps.size()); ++cj) {
      const auto& a = comps[ci];
      const auto& b = comps[cj];
      const int na = a.segment_count(), nb = b.segment_count();
      for (int si = 0; si < na; ++si) {
        const int sj_begin = (ci == cj) ? si + 1 : 0;
        for (int sj = sj_begin; sj < nb; ++sj) {
          if (ci == cj) {
            const bool adjacent = (sj == si + 1) || (si == 0 && sj == na - 1);
            if (adjacent) continue;
          }
          const Vec3 p1 = a.segment_start(si), p2 = a.segment_end(si);
          const Vec3 q1 = b.segment_start(sj), q2 = b.segment_end(sj);
          const double dax = p2.x - p1.x, day = p2.y - p1.y;
          const double dbx = q2.x - q1.x, dby = q2.y - q1.y;
          const double denom = cross2(dax, day, dbx, dby);
          const double scale = std::max({std::abs(dax), std::abs(day), std::abs(dbx),
                                         std::abs(dby), 1e-12});
          if (std::abs(denom) < 1e-12 * scale * scale) continue;  // parallel in projection
          const double rx = q1.x - p1.x, ry = q1.y - p1.y;
          const double ta = cross2(rx, ry, dbx, dby) / denom;
          const double tb = cross2(rx, ry, dax, day) / denom;
          const double margin = 1e-7;
          const bool a_in_range = ta > -margin && ta < 1.0 + margin;
          const bool b_in_range = tb > -margin && tb < 1.0 + margin;
          if (!a_in_range || !b_in_range) continue;
          const bool a_interior = ta > margin && ta < 1.0 - margin;
          const bool b_interior = tb > margin && tb < 1.0 - margin;
          if (!a_interior || !b_interior)
            throw Error("projection not regular: crossing too close to a vertex");
          const double za = p1.z + ta * (p2.z - p1.z);
          const double zb = q1.z + tb * (q2.z - q1.z);
          if (std::abs(za - zb) < geo::kProximityTol)
            throw Error("projection not regular: strands at equal height");
          const bool a_over = za > zb;
          const double ox = a_over ? dax : dbx, oy = a_over ? day : dby;
          const double ux = a_over ? dbx : dax, uy = a_over ? dby : day;
          const double chirality = cross2(ox, oy, ux, uy);
          if (chirality == 0.0) throw Error("projection not regular: tangential crossing");
          events.push_back({ci, si, cj, sj, ta, tb, chirality > 0 ? +1 : -1, a_over});
        }
      }
    }
  }

  // Order the passages along each curve and cut arcs between them.
  std::vector<std::vector<Passage>> passages(comps.size());
  for (int id = 0; id < static_cast<int>(events.size()); ++id) {
    const auto& e = events[id];
    passages[e.curve_a].push_back({e.seg_a, e.ta, id + 1, e.a_over});
    passages[e.curve_b].push_back({e.seg_b, e.tb, id + 1, !e.a_over});
  }

  struct Ends {
    int in_arc = 0, out_arc = 0;
  };
  std::map<std::pair<int, bool>, Ends> crossing_ends;  // (crossing id, over?)

  std::vector<std::vector<int>> components;
  int next_arc = 1;
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    auto& ps = passages[ci];
    if (ps.empty()) {
      components.push_back({});
      continue;
    }
    std::sort(ps.begin(), ps.end(), [](const Passage& lhs, const Passage& rhs) {
      return std::pair(lhs.segment, lhs.t) < std::pair(rhs.segment, rhs.t);
    });
    std::vector<int> arcs;
    for (size_t k = 0; k < ps.size(); ++k) arcs.push_back(next_arc++);
    // arcs[k] runs from passage k to passage k+1 (cyclically).
    std::vector<int> sequence;
    for (size_t k = 0; k < ps.size(); ++k) {
      const int in_arc = arcs[(k + ps.size() - 1) % ps.size()];
      const int out_arc = arcs[k];
      crossing_ends[{ps[k].crossing_id, ps[k].over}] = {in_arc, out_arc};
      sequence.push_back(out_arc);
    }
    components.push_back(std::move(sequence));
  }

  std::vector<Crossing> xs;
  for (int id = 0; id < static_cast<int>(events.size()); ++id) {
    const auto& over = crossing_ends.at({id + 1, true});
    const auto& under = crossing_ends.at({id + 1, false});
    Crossing x;
    x.id = id + 1;
    x.over_in = over.in_arc;
    x.over_out = over.out_arc;
    x.under_in = under.in_arc;
    x.under_out = under.out_arc;
    x.sign = events[id].sign;
    xs.push_back(x);
  }
  return LinkDiagram(std::move(xs), std::move(components));
}

}  // namespace knotflow
