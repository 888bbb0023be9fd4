#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"

#include "knotflow/errors.hpp"

namespace knotflow {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Vec3 operator*(const Vec3& v, double s) { return s * v; }
  friend Vec3 operator/(const Vec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) throw DegenerateSegments("cannot normalize a zero vector");
  return v / n;
}

// Closed polygonal space curve; the last vertex connects back to the first.
struct PolyCurve {
  std::vector<Vec3> vertices;

  int segment_count() const { return static_cast<int>(vertices.size()); }
  Vec3 segment_start(int i) const { return vertices[i]; }
  Vec3 segment_end(int i) const { return vertices[(i + 1) % vertices.size()]; }

  void validate() const {
    if (vertices.size() < 3)
      throw DegenerateSegments("a closed curve needs at least 3 vertices");
    for (size_t i = 0; i < vertices.size(); ++i) {
      const Vec3 d = vertices[(i + 1) % vertices.size()] - vertices[i];
      if (norm(d) < 1e-12)
        throw DegenerateSegments("consecutive vertices coincide at index " +
                                 std::to_string(i));
    }
  }

  PolyCurve reversed() const {
    PolyCurve r = *this;
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
  }
};

struct FramedGeometricLink {
  std::vector<PolyCurve> components;
  std::vector<int> framings;  // one integer per component
};

struct CSConstant {
  double k = 1.0;  // nonzero coupling; lambda = -1/k lives with the phases
};

namespace geo {

constexpr double kPi = std::numbers::pi;
constexpr double kProximityTol = 1e-9;

inline double clamp_unit(double v) { return std::max(-1.0, std::min(1.0, v)); }

// Minimal distance between two segments p1p2 and q1q2.
inline double segment_distance(const Vec3& p1, const Vec3& p2, const Vec3& q1,
                               const Vec3& q2) {
  const Vec3 d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
  const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  double s = 0.0, t = 0.0;
  if (a <= 1e-30 && e <= 1e-30) return norm(r);
  if (a <= 1e-30) {
    t = std::max(0.0, std::min(1.0, f / e));
  } else {
    const double c = dot(d1, r);
    if (e <= 1e-30) {
      s = std::max(0.0, std::min(1.0, -c / a));
    } else {
      const double b = dot(d1, d2), denom = a * e - b * b;
      if (denom > 1e-30) s = std::max(0.0, std::min(1.0, (b * f - c * e) / denom));
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::max(0.0, std::min(1.0, -c / a));
      } else if (t > 1.0) {
        t = 1.0;
        s = std::max(0.0, std::min(1.0, (b - c) / a));
      }
    }
  }
  const Vec3 cp = p1 + s * d1, cq = q1 + t * d2;
  return norm(cp - cq);
}

// Signed solid angle Omega subtended by the segment pair (p1p2, p3p4):
// the exact contribution of the pair to the Gauss double integral is
// Omega / (4 pi). Spherical-excess form of the quadrilateral spanned by
// the direction sphere images; exact for straight segments.
inline double segment_pair_solid_angle(const Vec3& p1, const Vec3& p2, const Vec3& p3,
                                       const Vec3& p4) {
  const Vec3 r12 = p2 - p1, r34 = p4 - p3;
  const Vec3 r13 = p3 - p1, r14 = p4 - p1, r23 = p3 - p2, r24 = p4 - p2;

  const Vec3 raw_n1 = cross(r13, r14), raw_n2 = cross(r14, r24);
  const Vec3 raw_n3 = cross(r24, r23), raw_n4 = cross(r23, r13);
  const double m1 = norm(raw_n1), m2 = norm(raw_n2), m3 = norm(raw_n3),
               m4 = norm(raw_n4);
  if (m1 < 1e-14 || m2 < 1e-14 || m3 < 1e-14 || m4 < 1e-14)
    return 0.0;  // degenerate spherical quadrilateral subtends no area
  const Vec3 n1 = raw_n1 / m1, n2 = raw_n2 / m2, n3 = raw_n3 / m3, n4 = raw_n4 / m4;

  const double area = std::asin(clamp_unit(dot(n1, n2))) +
                      std::asin(clamp_unit(dot(n2, n3))) +
                      std::asin(clamp_unit(dot(n3, n4))) +
                      std::asin(clamp_unit(dot(n4, n1)));
  const double orient = dot(cross(r34, r12), r13);
  if (orient > 0.0) return area;
  if (orient < 0.0) return -area;
  return 0.0;
}

}  // namespace geo

inline double min_curve_distance(const PolyCurve& c1, const PolyCurve& c2) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < c1.segment_count(); ++i)
    for (int j = 0; j < c2.segment_count(); ++j)
      best = std::min(best, geo::segment_distance(c1.segment_start(i), c1.segment_end(i),
                                                  c2.segment_start(j), c2.segment_end(j)));
  return best;
}

// Minimal distance between non-adjacent segments of one curve.
inline double min_self_distance(const PolyCurve& c) {
  const int n = c.segment_count();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // wrap-adjacent
      best = std::min(best, geo::segment_distance(c.segment_start(i), c.segment_end(i),
                                                  c.segment_start(j), c.segment_end(j)));
    }
  }
  return best;
}

// Gauss linking number of two disjoint closed polygons, by the exact
// segment-pair solid-angle formula with compensated summation.
inline double polygonal_linking(const PolyCurve& c1, const PolyCurve& c2) {
  c1.validate();
  c2.validate();
  if (min_curve_distance(c1, c2) < geo::kProximityTol)
    throw CurvesTooClose("curves closer than 1e-9; linking integral ill-conditioned");
  double sum = 0.0, comp = 0.0;
  for (int i = 0; i < c1.segment_count(); ++i) {
    for (int j = 0; j < c2.segment_count(); ++j) {
      const double w =
          geo::segment_pair_solid_angle(c1.segment_start(i), c1.segment_end(i),
                                        c2.segment_start(j), c2.segment_end(j));
      const double y = w - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return sum / (4.0 * geo::kPi);
}

// Writhe of a simple closed polygon: the self-pair Gauss integral over
// non-adjacent segment pairs (adjacent pairs contribute zero).
inline double polygonal_writhe(const PolyCurve& c) {
  c.validate();
  if (min_self_distance(c) < geo::kProximityTol)
    throw CurvesTooClose("curve nearly self-intersects; writhe integral ill-conditioned");
  const int n = c.segment_count();
  double sum = 0.0, comp = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const double w = geo::segment_pair_solid_angle(c.segment_start(i), c.segment_end(i),
                                                     c.segment_start(j), c.segment_end(j));
      const double y = w - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return sum / (2.0 * geo::kPi);
}

// Normal field along the curve by projection parallel transport, closed up
// by spreading the holonomy correction (plus any requested extra full
// twists) evenly along the curve.
inline std::vector<Vec3> transported_normals(const PolyCurve& c, int twists) {
  const int n = c.segment_count();
  std::vector<Vec3> tangents(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 prev = c.vertices[(i + n - 1) % n];
    const Vec3 next = c.vertices[(i + 1) % n];
    tangents[i] = normalized(next - prev);
  }
  // Seed normal: least-aligned axis projected off the tangent.
  const Vec3 t0 = tangents[0];
  const double ax = std::abs(t0.x), ay = std::abs(t0.y), az = std::abs(t0.z);
  Vec3 seed{1.0, 0.0, 0.0};
  if (ay <= ax && ay <= az)
    seed = {0.0, 1.0, 0.0};
  else if (az <= ax && az <= ay)
    seed = {0.0, 0.0, 1.0};
  Vec3 n0 = normalized(seed - dot(seed, t0) * t0);

  std::vector<Vec3> normals(n);
  normals[0] = n0;
  for (int i = 1; i < n; ++i) {
    const Vec3 projected = normals[i - 1] - dot(normals[i - 1], tangents[i]) * tangents[i];
    normals[i] = norm(projected) < 1e-12 ? normals[i - 1] : normalized(projected);
  }
  // Transport once more around the seam to measure the holonomy.
  Vec3 back = normals[n - 1] - dot(normals[n - 1], tangents[0]) * tangents[0];
  back = norm(back) < 1e-12 ? normals[n - 1] : normalized(back);
  const double angle =
      std::atan2(dot(cross(back, n0), t0), geo::clamp_unit(dot(back, n0)));
  const double total_turn = angle + 2.0 * geo::kPi * twists;

  for (int i = 0; i < n; ++i) {
    const double phi = total_turn * (static_cast<double>(i) / n);
    const Vec3& t = tangents[i];
    const Vec3& v = normals[i];
    // Rodrigues rotation of v about t by phi.
    normals[i] = std::cos(phi) * v + std::sin(phi) * cross(t, v) +
                 (1.0 - std::cos(phi)) * dot(t, v) * t;
  }
  return normals;
}

// Pushes the curve off itself along the transported normal field; the
// resulting parallel copy realizes the framing used by the helicity
// diagonal.
inline PolyCurve frame_offset(const PolyCurve& c, double epsilon, int twists = 0) {
  c.validate();
  if (epsilon <= 0.0) throw EpsilonTooLarge("epsilon must be positive");
  const double clearance = min_self_distance(c);
  if (epsilon >= 0.5 * clearance)
    throw EpsilonTooLarge("epsilon " + std::to_string(epsilon) +
                          " exceeds half the minimal self-distance " +
                          std::to_string(clearance));
  const auto normals = transported_normals(c, twists);
  PolyCurve out;
  out.vertices.resize(c.vertices.size());
  for (size_t i = 0; i < c.vertices.size(); ++i)
    out.vertices[i] = c.vertices[i] + epsilon * normals[i];
  return out;
}

// Biot-Savart field of a unit-current straight segment from p to q,
// evaluated at x (closed form, no quadrature).
inline Vec3 biot_savart_segment(const Vec3& p, const Vec3& q, const Vec3& x) {
  const Vec3 a = p - x, b = q - x;
  const double na = norm(a), nb = norm(b);
  const double denom = na * nb * (na * nb + dot(a, b));
  if (denom < 1e-30) throw PointOnCurve("field point on the source segment line");
  return (1.0 / (4.0 * geo::kPi)) * ((na + nb) / denom) * cross(a, b);
}

// Normalized link field a_L(x): circulation along any disjoint loop equals
// the loop's total linking with the link.
inline Vec3 link_field(const FramedGeometricLink& link, const Vec3& x) {
  Vec3 acc{0.0, 0.0, 0.0};
  for (const auto& comp : link.components) {
    for (int i = 0; i < comp.segment_count(); ++i) {
      const Vec3 p = comp.segment_start(i), q = comp.segment_end(i);
      if (geo::segment_distance(p, q, x, x) < geo::kProximityTol)
        throw PointOnCurve("evaluation point within 1e-9 of the link");
      acc = acc + biot_savart_segment(p, q, x);
    }
  }
  return acc;
}

// The vector potential sourced by the link: -(4 pi / k) times the
// normalized Biot-Savart field.
inline Vec3 vector_potential(const FramedGeometricLink& link, const Vec3& x,
                             const CSConstant& cs) {
  if (cs.k == 0.0) throw Error("Chern-Simons constant k must be nonzero");
  return (-4.0 * geo::kPi / cs.k) * link_field(link, x);
}

// Circulation of the normalized link field along a closed polygonal loop,
// by per-segment midpoint sums with Richardson refinement.
inline double circulation(const FramedGeometricLink& link, const PolyCurve& loop,
                          double rel_tol = 1e-6) {
  loop.validate();
  auto midpoint_sum = [&](int pieces) {
    double sum = 0.0, comp = 0.0;
    for (int i = 0; i < loop.segment_count(); ++i) {
      const Vec3 p = loop.segment_start(i), q = loop.segment_end(i);
      const Vec3 step = (q - p) / pieces;
      for (int k = 0; k < pieces; ++k) {
        const Vec3 mid = p + (k + 0.5) * step;
        const double w = dot(link_field(link, mid), step);
        const double y = w - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
      }
    }
    return sum;
  };
  int pieces = 2;
  double coarse = midpoint_sum(1);
  double previous = coarse;
  for (int iter = 0; iter < 14; ++iter) {
    const double fine = midpoint_sum(pieces);
    const double extrapolated = fine + (fine - coarse) / 3.0;
    if (std::abs(extrapolated - previous) <=
        rel_tol * std::max(1.0, std::abs(extrapolated)))
      return extrapolated;
    previous = extrapolated;
    coarse = fine;
    pieces *= 2;
  }
  return previous;
}

// Helicity of a framed link: ordered-pair sum of Gauss linking numbers off
// the diagonal plus the integer framings on it.
inline double helicity_geometric(const FramedGeometricLink& link) {
  const int n = static_cast<int>(link.components.size());
  if (static_cast<int>(link.framings.size()) != n)
    throw MalformedInput("framed link needs one framing per component");
  double h = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      h += 2.0 * polygonal_linking(link.components[i], link.components[j]);
  for (int fr : link.framings) h += fr;
  return h;
}

// Splits every segment into `pieces` equal parts; an identity for all the
// polygon integrals above, up to rounding.
inline PolyCurve subdivide(const PolyCurve& c, int pieces) {
  if (pieces < 1) throw MalformedInput("subdivision factor must be >= 1");
  PolyCurve out;
  for (int i = 0; i < c.segment_count(); ++i) {
    const Vec3 p = c.segment_start(i), q = c.segment_end(i);
    for (int k = 0; k < pieces; ++k)
      out.vertices.push_back(p + (static_cast<double>(k) / pieces) * (q - p));
  }
  return out;
}

// Geometric link JSON:
//   {"components": [{"vertices": [[x,y,z],...], "framing": int}, ...]}
inline FramedGeometricLink parse_geometric_link(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("geometric link JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw MalformedInput("geometric link JSON needs a \"components\" array");
  FramedGeometricLink link;
  for (const auto& cj : j["components"]) {
    if (!cj.is_object() || !cj.contains("vertices") || !cj["vertices"].is_array())
      throw MalformedInput("each component needs a \"vertices\" array");
    PolyCurve curve;
    for (const auto& vj : cj["vertices"]) {
      if (!vj.is_array() || vj.size() != 3)
        throw MalformedInput("each vertex must be [x, y, z]");
      curve.vertices.push_back(
          {vj[0].get<double>(), vj[1].get<double>(), vj[2].get<double>()});
    }
    curve.validate();
    link.components.push_back(std::move(curve));
    link.framings.push_back(cj.value("framing", 0));
  }
  return link;
}

inline nlohmann::ordered_json geometric_link_to_json(const FramedGeometricLink& link) {
  nlohmann::ordered_json j;
  j["components"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < link.components.size(); ++i) {
    nlohmann::ordered_json cj;
    cj["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : link.components[i].vertices)
      cj["vertices"].push_back({v.x, v.y, v.z});
    cj["framing"] = link.framings[i];
    j["components"].push_back(cj);
  }
  return j;
}

}  // namespace knotflow
