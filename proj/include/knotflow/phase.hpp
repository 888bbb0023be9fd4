#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "knotflow/diagram.hpp"
#include "knotflow/errors.hpp"
#include "knotflow/geometry.hpp"
#include "knotflow/moves.hpp"

namespace knotflow {

// Unit-modulus value e^(2 pi i lambda m). Whenever the exponent is an
// integer multiple m of lambda it is kept explicitly, so phase ratios are
// exact integer statements rather than float comparisons.
struct Phase {
  std::complex<double> value{1.0, 0.0};
  std::optional<int> exponent_over_lambda;  // m, when the exponent is m*lambda
  double lambda = 0.0;
};

struct PhaseParam {
  double lambda = 0.0;
  std::complex<double> alpha{1.0, 0.0};  // e^(2 pi i lambda)

  explicit PhaseParam(double l) : lambda(l) {
    if (!std::isfinite(l)) throw MalformedInput("lambda must be finite");
    alpha = std::polar(1.0, 2.0 * geo::kPi * l);
  }

  // Integer lambda collapses alpha to 1 and the whole phase theory with it.
  bool degenerate() const { return std::abs(lambda - std::round(lambda)) < 1e-12; }
};

inline Phase phase_from_exponent(const PhaseParam& p, int m) {
  Phase ph;
  ph.value = std::polar(1.0, 2.0 * geo::kPi * p.lambda * m);
  ph.exponent_over_lambda = m;
  ph.lambda = p.lambda;
  return ph;
}

inline Phase alpha_of(double lambda) { return phase_from_exponent(PhaseParam(lambda), 1); }

// Ratio after/before; exact in the exponent when both sides carry one.
inline Phase phase_ratio(const Phase& after, const Phase& before) {
  Phase r;
  r.lambda = after.lambda;
  r.value = after.value / before.value;
  if (after.exponent_over_lambda && before.exponent_over_lambda)
    r.exponent_over_lambda = *after.exponent_over_lambda - *before.exponent_over_lambda;
  return r;
}

// psi(L) = e^(2 pi i lambda H(L)) with H the blackboard-framed helicity of
// the diagram, which equals its writhe.
inline Phase psi_diagram(const LinkDiagram& d, const PhaseParam& p) {
  return phase_from_exponent(p, d.writhe());
}

// Same wave function computed from the analytic helicity of a framed
// geometric link. The exponent is recorded when the helicity is within
// 1e-4 of an integer.
inline Phase psi_geometric(const FramedGeometricLink& link, const PhaseParam& p) {
  const double h = helicity_geometric(link);
  Phase ph;
  ph.lambda = p.lambda;
  ph.value = std::polar(1.0, 2.0 * geo::kPi * p.lambda * h);
  const double nearest = std::round(h);
  if (std::abs(h - nearest) < 1e-4) ph.exponent_over_lambda = static_cast<int>(nearest);
  return ph;
}

// psi(after)/psi(before) for a local surgery: an eight-figure insertion of
// the given sign (site with strands) contributes alpha^sign, a crossing
// switch (site with a crossing id) contributes alpha^(-2 sign).
inline Phase surgery_ratio(const LinkDiagram& d, const CrossingSite& site, int sign,
                           const PhaseParam& p) {
  LinkDiagram after = [&] {
    if (site.crossing) return switch_crossing(d, *site.crossing);
    return add_eight(d, site, sign);
  }();
  return phase_ratio(psi_diagram(after, p), psi_diagram(d, p));
}

// Checks alpha^-1 psi(L+) - alpha psi(L-) = 0 where L+- are the two
// eight-surgery insertions at the site. Exact in exponent arithmetic: both
// terms reduce to psi(L0).
inline bool verify_eq32(const LinkDiagram& d0, const CrossingSite& site,
                        const PhaseParam& p) {
  const LinkDiagram l_plus = add_eight(d0, site, +1);
  const LinkDiagram l_minus = add_eight(d0, site, -1);
  const int e_plus = l_plus.writhe() - 1;   // alpha^-1 psi(L+)
  const int e_minus = l_minus.writhe() + 1;  // alpha psi(L-)
  if (e_plus != e_minus) return false;
  const std::complex<double> lhs =
      std::polar(1.0, 2.0 * geo::kPi * p.lambda * e_plus) -
      std::polar(1.0, 2.0 * geo::kPi * p.lambda * e_minus);
  return std::abs(lhs) < 1e-12;
}

}  // namespace knotflow
