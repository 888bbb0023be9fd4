#pragma once

#include <cmath>
#include <vector>

#include "knotflow/braid.hpp"
#include "knotflow/diagram.hpp"
#include "knotflow/geometry.hpp"
#include "knotflow/moves.hpp"

namespace knotflow {
namespace catalog {

// -- Standard diagrams -------------------------------------------------

inline LinkDiagram unknot() { return LinkDiagram({}, {{}}); }

inline LinkDiagram unlink(int n) {
  std::vector<std::vector<int>> comps(n);
  return LinkDiagram({}, std::move(comps));
}

// One-crossing curl of the given handedness (the eight figure E+-).
inline LinkDiagram curl(int sign) { return add_eight(unknot(), CrossingSite::on_circle(0), sign); }

inline LinkDiagram hopf(int sign) { return from_braid(2, {sign, sign}); }

inline LinkDiagram trefoil_right() { return from_braid(2, {1, 1, 1}); }
inline LinkDiagram trefoil_left() { return from_braid(2, {-1, -1, -1}); }

inline LinkDiagram figure_eight() { return from_braid(3, {1, -2, 1, -2}); }

inline LinkDiagram whitehead() { return from_braid(3, {1, -2, 1, -2, 1}); }

inline LinkDiagram borromean() { return from_braid(3, {1, -2, 1, -2, 1, -2}); }

inline LinkDiagram torus_2_4() { return from_braid(2, {1, 1, 1, 1}); }

// -- Geometric fixtures -------------------------------------------------

// Sampling grids are staggered by an irrational-ish fraction of a step so
// that projected crossings never land on polygon vertices, at any of the
// segment counts the tools expose.
constexpr double kSampleStagger = 0.381966011250105;

inline PolyCurve circle_curve(const Vec3& center, const Vec3& u, const Vec3& v,
                              double radius, int segments) {
  PolyCurve c;
  for (int i = 0; i < segments; ++i) {
    const double t = 2.0 * geo::kPi * (i + kSampleStagger) / segments;
    c.vertices.push_back(center + radius * std::cos(t) * u + radius * std::sin(t) * v);
  }
  return c;
}

// Two once-linked circles (linking +1); the second is tilted so the
// xy-projection is regular.
inline FramedGeometricLink hopf_curves(int segments = 200) {
  FramedGeometricLink link;
  link.components.push_back(
      circle_curve({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, segments));
  const double tilt = 0.35;
  link.components.push_back(circle_curve({1, 0, 0}, {1, 0, 0},
                                         {0, -std::sin(tilt), -std::cos(tilt)}, 1.0,
                                         segments));
  link.framings = {0, 0};
  return link;
}

// The two components of the (2,4) torus link on the torus of radii (2, 0.6),
// oriented so the pair links +2.
inline FramedGeometricLink torus_2_4_curves(int segments = 200) {
  FramedGeometricLink link;
  for (int comp = 0; comp < 2; ++comp) {
    PolyCurve c;
    const double phase = geo::kPi * comp;
    for (int i = 0; i < segments; ++i) {
      const double t = 2.0 * geo::kPi * (i + kSampleStagger) / segments;
      const double r = 2.0 + 0.6 * std::cos(2.0 * t + phase);
      c.vertices.push_back(
          {r * std::cos(t), r * std::sin(t), -0.6 * std::sin(2.0 * t + phase)});
    }
    link.components.push_back(std::move(c));
  }
  link.framings = {0, 0};
  return link;
}

// Polygonal trefoil; its xy-projection is the standard 3-crossing diagram
// with writhe +3.
inline PolyCurve trefoil_curve(int segments = 200) {
  PolyCurve c;
  for (int i = 0; i < segments; ++i) {
    const double t = 2.0 * geo::kPi * (i + kSampleStagger) / segments;
    c.vertices.push_back({std::sin(t) + 2.0 * std::sin(2.0 * t),
                          std::cos(t) - 2.0 * std::cos(2.0 * t), std::sin(3.0 * t)});
  }
  return c;
}

inline FramedGeometricLink trefoil_fixture(int segments = 200, int framing = 3) {
  FramedGeometricLink link;
  link.components.push_back(trefoil_curve(segments));
  link.framings = {framing};
  return link;
}

// Polygonal space curves realizing a braid closure: strands descend the
// page, crossings resolve with z-bumps, and nested hooks on the right
// close the braid. The xy-projection reproduces the braid diagram exactly,
// so these fixtures come with a regular projection by construction.
inline FramedGeometricLink braid_closure_curves(int strands,
                                                const std::vector<int>& word) {
  const int m = static_cast<int>(word.size());
  const double bump = 0.45;
  const double y_bot = -static_cast<double>(m);

  auto one_pass = [&](int start, std::vector<Vec3>& out) {
    int p = start;
    out.push_back({static_cast<double>(p), 0.0, 0.0});
    for (int li = 0; li < m; ++li) {
      const int letter = word[li];
      const int j = std::abs(letter) - 1;
      const double y0 = -static_cast<double>(li);
      const double y1 = y0 - 1.0;
      if (p == j || p == j + 1) {
        const bool from_right = (p == j + 1);
        const bool over = (letter > 0) ? from_right : !from_right;
        const double z = over ? bump : -bump;
        const int q = (p == j) ? j + 1 : j;
        const double x0 = p, x1 = q;
        out.push_back({x0 + 0.35 * (x1 - x0), y0 - 0.35, z});
        out.push_back({x0 + 0.65 * (x1 - x0), y0 - 0.65, z});
        out.push_back({static_cast<double>(q), y1, 0.0});
        p = q;
      } else {
        out.push_back({static_cast<double>(p), y1, 0.0});
      }
    }
    return p;
  };

  FramedGeometricLink link;
  std::vector<bool> started(strands, false);
  for (int i0 = 0; i0 < strands; ++i0) {
    if (started[i0]) continue;
    PolyCurve curve;
    int p = i0;
    do {
      started[p] = true;
      p = one_pass(p, curve.vertices);
      // Closure hook for position p; lower indices wrap outermost.
      const double extent = 0.6 + 0.4 * (strands - 1 - p);
      const double right = (strands - 1) + extent;
      const double below = y_bot - extent;
      const double above = extent;
      curve.vertices.push_back({static_cast<double>(p), below, 0.0});
      curve.vertices.push_back({right, below, 0.0});
      curve.vertices.push_back({right, above, 0.0});
      curve.vertices.push_back({static_cast<double>(p), above, 0.0});
    } while (p != i0);
    link.components.push_back(std::move(curve));
    link.framings.push_back(0);
  }
  return link;
}

// Whitehead link as the closed 3-braid s1 s2^-1 s1 s2^-1 s1: the Gauss
// linking number of its two components vanishes although the link is
// nontrivial.
inline FramedGeometricLink whitehead_curves() {
  return braid_closure_curves(3, {1, -2, 1, -2, 1});
}

}  // namespace catalog
}  // namespace knotflow
