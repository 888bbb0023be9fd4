#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "knotflow/diagram.hpp"
#include "knotflow/errors.hpp"

namespace knotflow {

// References one strand of a rewrite site: either an arc, or a
// crossing-free circle named by its component index.
struct StrandRef {
  bool is_circle = false;
  int value = 0;

  static StrandRef arc(int label) { return {false, label}; }
  static StrandRef circle(int component) { return {true, component}; }
  friend bool operator==(const StrandRef&, const StrandRef&) = default;
};

// A rewrite site: a crossing id (switch, smooth, R1/R2 removal) or one or
// two strand references (eight-surgery, R1/R2 insertion, R3). The parallel
// flag carries the relative orientation for two-strand insertions and
// doubles as a side/sign selector where a move has a binary choice.
struct CrossingSite {
  std::optional<int> crossing;
  std::optional<std::pair<StrandRef, StrandRef>> strands;
  bool parallel = true;

  static CrossingSite at_crossing(int id) {
    CrossingSite s;
    s.crossing = id;
    return s;
  }
  static CrossingSite on_strand(StrandRef a) {
    CrossingSite s;
    s.strands = {a, a};
    return s;
  }
  static CrossingSite on_arc(int label) { return on_strand(StrandRef::arc(label)); }
  static CrossingSite on_circle(int component) {
    return on_strand(StrandRef::circle(component));
  }
  static CrossingSite on_strands(StrandRef a, StrandRef b, bool parallel = true) {
    CrossingSite s;
    s.strands = {a, b};
    s.parallel = parallel;
    return s;
  }

  bool is_single_strand() const {
    return strands.has_value() && strands->first == strands->second;
  }
};

enum class RMove { R1, R2, R3 };
enum class RDirection { Add, Remove };

namespace detail {

using Rank = std::pair<int, int>;  // (inherited component position, tiebreak)

// Accumulates a rewritten crossing set and reassembles a valid diagram,
// preserving component order through inherited ranks. Arcs that end up in
// no crossing close into crossing-free circles.
class DiagramRebuilder {
public:
  explicit DiagramRebuilder(const LinkDiagram& d) : crossings_(d.crossings()) {
    next_arc_ = 1;
    next_id_ = 1;
    for (const auto& x : crossings_) next_id_ = std::max(next_id_, x.id + 1);
    for (int ci = 0; ci < d.component_count(); ++ci) {
      const auto& comp = d.components()[ci];
      if (comp.empty()) {
        free_ranks_.push_back({{ci, -1}, ci});
        continue;
      }
      for (int a : comp) {
        live_.insert(a);
        rank_[a] = {ci, a};
        next_arc_ = std::max(next_arc_, a + 1);
      }
    }
  }

  std::vector<Crossing>& crossings() { return crossings_; }

  int fresh_crossing_id() { return next_id_++; }

  int fresh_arc(Rank rank) {
    const int a = next_arc_++;
    live_.insert(a);
    rank_[a] = rank;
    return a;
  }

  Rank rank_of(int arc) const {
    auto it = rank_.find(arc);
    return it == rank_.end() ? Rank{INT_MAX, arc} : it->second;
  }

  // Consumes a crossing-free circle, returning its rank for reuse by the
  // arcs that replace it.
  Rank consume_free_circle(int component) {
    for (auto it = free_ranks_.begin(); it != free_ranks_.end(); ++it) {
      if (it->second == component) {
        Rank r = it->first;
        free_ranks_.erase(it);
        return r;
      }
    }
    throw BadSite("component " + std::to_string(component) +
                  " is not a crossing-free circle");
  }

  void remove_crossing(int id) {
    for (auto it = crossings_.begin(); it != crossings_.end(); ++it) {
      if (it->id == id) {
        crossings_.erase(it);
        return;
      }
    }
    throw BadIndex("no crossing with id " + std::to_string(id));
  }

  // Identifies arc `absorbed` with arc `keep` (the join of two strand ends).
  void merge_arcs(int keep, int absorbed) {
    if (keep == absorbed) return;  // the strand closes into a loop
    for (auto& x : crossings_) {
      if (x.under_in == absorbed) x.under_in = keep;
      if (x.under_out == absorbed) x.under_out = keep;
      if (x.over_in == absorbed) x.over_in = keep;
      if (x.over_out == absorbed) x.over_out = keep;
    }
    rank_[keep] = std::min(rank_of(keep), rank_of(absorbed));
    rank_.erase(absorbed);
    live_.erase(absorbed);
  }

  void drop_arc(int arc) {
    live_.erase(arc);
    rank_.erase(arc);
  }

  // Renames `arc` to a fresh label at its incoming endpoint only, splitting
  // the arc in two; returns the new outgoing-half label.
  int split_arc_at_target(int arc) {
    const int out_half = fresh_arc(rank_of(arc));
    for (auto& x : crossings_) {
      if (x.under_in == arc) {
        x.under_in = out_half;
        return out_half;
      }
      if (x.over_in == arc) {
        x.over_in = out_half;
        return out_half;
      }
    }
    throw Error("internal: arc without incoming endpoint");
  }

  struct Assembled {
    LinkDiagram diagram;
    std::map<int, int> orphan_components;  // orphan arc -> component index
  };

  Assembled finalize() {
    auto cycles = LinkDiagram::trace_cycles(crossings_);
    std::set<int> used;
    for (const auto& cy : cycles)
      for (int a : cy) {
        if (!live_.count(a)) throw Error("internal: rewrite produced stale arc");
        used.insert(a);
      }

    struct Entry {
      Rank rank;
      std::vector<int> arcs;
      int orphan_arc = 0;  // nonzero when this entry is a collapsed loop
    };
    std::vector<Entry> entries;
    for (auto& cy : cycles) {
      Rank r{INT_MAX, INT_MAX};
      for (int a : cy) r = std::min(r, rank_of(a));
      entries.push_back({r, std::move(cy), 0});
    }
    for (int a : live_)
      if (!used.count(a)) entries.push_back({rank_of(a), {}, a});
    for (const auto& [r, comp] : free_ranks_) {
      (void)comp;
      entries.push_back({r, {}, 0});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& lhs, const Entry& rhs) { return lhs.rank < rhs.rank; });

    std::vector<std::vector<int>> comps;
    std::map<int, int> orphans;
    for (auto& e : entries) {
      if (e.orphan_arc != 0) orphans[e.orphan_arc] = static_cast<int>(comps.size());
      comps.push_back(std::move(e.arcs));
    }
    return {LinkDiagram(crossings_, std::move(comps)), std::move(orphans)};
  }

private:
  std::vector<Crossing> crossings_;
  std::set<int> live_;
  std::map<int, Rank> rank_;
  std::vector<std::pair<Rank, int>> free_ranks_;  // (rank, original component index)
  int next_arc_ = 1;
  int next_id_ = 1;
};

}  // namespace detail

// Exchanges the over- and under-strand at one crossing. The traversal is
// unchanged; the sign flips, so the writhe moves by -2*sign.
inline LinkDiagram switch_crossing(const LinkDiagram& d, int crossing_id) {
  std::vector<Crossing> xs = d.crossings();
  bool found = false;
  for (auto& x : xs) {
    if (x.id != crossing_id) continue;
    std::swap(x.under_in, x.over_in);
    std::swap(x.under_out, x.over_out);
    x.sign = -x.sign;
    found = true;
  }
  if (!found) throw BadIndex("no crossing with id " + std::to_string(crossing_id));
  return LinkDiagram(std::move(xs), d.components());
}

// Mirror image: every crossing switched.
inline LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) {
    std::swap(x.under_in, x.over_in);
    std::swap(x.under_out, x.over_out);
    x.sign = -x.sign;
  }
  return LinkDiagram(std::move(xs), d.components());
}

// Reverses the orientation of every component. Crossing signs are
// preserved because both strands flip at every crossing.
inline LinkDiagram reverse(const LinkDiagram& d) {
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) {
    std::swap(x.under_in, x.under_out);
    std::swap(x.over_in, x.over_out);
  }
  std::vector<std::vector<int>> comps = d.components();
  for (auto& comp : comps) std::reverse(comp.begin(), comp.end());
  return LinkDiagram(std::move(xs), std::move(comps));
}

struct SmoothResult {
  LinkDiagram diagram;
  CrossingSite site;  // two-strand site at which add_eight(sign) restores the crossing
};

// Oriented smoothing: the crossing is deleted and the strands reconnect
// respecting orientation (under_in joins over_out, over_in joins
// under_out). A self-crossing splits its component, an inter-component
// crossing merges two, so the component count always moves by one.
inline SmoothResult smooth_crossing_with_site(const LinkDiagram& d, int crossing_id) {
  const Crossing x = d.crossing_by_id(crossing_id);
  detail::DiagramRebuilder rb(d);
  rb.remove_crossing(crossing_id);
  rb.merge_arcs(x.under_in, x.over_out);
  rb.merge_arcs(x.over_in, x.under_out);
  auto out = rb.finalize();

  auto ref_for = [&out](int arc) {
    auto it = out.orphan_components.find(arc);
    if (it != out.orphan_components.end()) return StrandRef::circle(it->second);
    return StrandRef::arc(arc);
  };
  CrossingSite site =
      CrossingSite::on_strands(ref_for(x.under_in), ref_for(x.over_in), true);
  return {std::move(out.diagram), site};
}

inline LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing_id) {
  return smooth_crossing_with_site(d, crossing_id).diagram;
}

namespace detail {

// Opens a strand reference for splicing: an arc is split at a point (its
// incoming half keeps the label), a free circle contributes one new arc
// serving as both halves.
struct OpenStrand {
  int in_arc = 0;
  int out_arc = 0;
};

inline OpenStrand open_strand(DiagramRebuilder& rb, const StrandRef& ref,
                              const LinkDiagram& d) {
  if (ref.is_circle) {
    if (ref.value < 0 || ref.value >= d.component_count() ||
        !d.components()[ref.value].empty())
      throw BadSite("strand reference is not a crossing-free circle");
    const Rank r = rb.consume_free_circle(ref.value);
    const int a = rb.fresh_arc(r);
    return {a, a};
  }
  if (!d.has_arc(ref.value)) throw BadSite("no arc " + std::to_string(ref.value));
  const int out_half = rb.split_arc_at_target(ref.value);
  return {ref.value, out_half};
}

}  // namespace detail

// Eight-figure surgery: inserts one crossing of the given sign. A
// two-strand site is the inverse of an oriented smoothing; a single-strand
// site inserts a kink. Either way the writhe (helicity) moves by exactly
// `sign`. The spliced arrangement must stay planar, otherwise the site is
// rejected.
inline LinkDiagram add_eight(const LinkDiagram& d, const CrossingSite& site, int sign) {
  if (sign != 1 && sign != -1) throw BadSite("sign must be +1 or -1");
  if (!site.strands) throw BadSite("eight surgery needs a strand site");

  if (site.is_single_strand()) {
    detail::DiagramRebuilder rb(d);
    const auto s = detail::open_strand(rb, site.strands->first, d);
    const int loop = rb.fresh_arc(rb.rank_of(s.in_arc));
    Crossing x;
    x.id = rb.fresh_crossing_id();
    x.under_in = s.in_arc;
    x.under_out = loop;
    x.over_in = loop;
    x.over_out = s.out_arc;
    x.sign = sign;
    rb.crossings().push_back(x);
    return rb.finalize().diagram;
  }

  if (!site.parallel)
    throw BadSite("eight surgery requires coherently oriented strands");
  // The two strands swap continuations at the new crossing. Which strand
  // passes over is not part of the site; the planar choice is selected by
  // validation.
  for (int under_first = 1; under_first >= 0; --under_first) {
    detail::DiagramRebuilder rb(d);
    const auto sa = detail::open_strand(rb, site.strands->first, d);
    const auto sb = detail::open_strand(rb, site.strands->second, d);
    Crossing x;
    x.id = rb.fresh_crossing_id();
    x.sign = sign;
    if (under_first) {
      x.under_in = sa.in_arc;
      x.over_out = sa.out_arc;
      x.over_in = sb.in_arc;
      x.under_out = sb.out_arc;
    } else {
      x.over_in = sa.in_arc;
      x.under_out = sa.out_arc;
      x.under_in = sb.in_arc;
      x.over_out = sb.out_arc;
    }
    rb.crossings().push_back(x);
    try {
      return rb.finalize().diagram;
    } catch (const InconsistentDiagram&) {
      // wrong chirality for this site; try the other
    }
  }
  throw BadSite("strands do not admit a planar crossing of that sign");
}

namespace detail {

// Strand passage accessors: a crossing carries an under passage and an
// over passage, each with an incoming and an outgoing arc.
enum class Pass { Under, Over };

inline int pass_in(const Crossing& x, Pass p) {
  return p == Pass::Under ? x.under_in : x.over_in;
}
inline int pass_out(const Crossing& x, Pass p) {
  return p == Pass::Under ? x.under_out : x.over_out;
}
inline void set_pass_in(Crossing& x, Pass p, int arc) {
  (p == Pass::Under ? x.under_in : x.over_in) = arc;
}
inline void set_pass_out(Crossing& x, Pass p, int arc) {
  (p == Pass::Under ? x.under_out : x.over_out) = arc;
}
inline Pass other_pass(Pass p) { return p == Pass::Under ? Pass::Over : Pass::Under; }

inline std::optional<Pass> pass_of_out_arc(const Crossing& x, int arc) {
  if (x.under_out == arc) return Pass::Under;
  if (x.over_out == arc) return Pass::Over;
  return std::nullopt;
}
inline std::optional<Pass> pass_of_in_arc(const Crossing& x, int arc) {
  if (x.under_in == arc) return Pass::Under;
  if (x.over_in == arc) return Pass::Over;
  return std::nullopt;
}

inline Crossing& crossing_ref(std::vector<Crossing>& xs, int id) {
  for (auto& x : xs)
    if (x.id == id) return x;
  throw BadIndex("no crossing with id " + std::to_string(id));
}

}  // namespace detail

inline LinkDiagram reidemeister(const LinkDiagram& d, RMove move,
                                const CrossingSite& site, RDirection direction);

namespace detail {

inline LinkDiagram r1_remove(const LinkDiagram& d, int crossing_id) {
  const Crossing x = d.crossing_by_id(crossing_id);
  DiagramRebuilder rb(d);
  rb.remove_crossing(crossing_id);
  if (x.under_out == x.over_in) {
    rb.drop_arc(x.under_out);
    rb.merge_arcs(x.under_in, x.over_out);
  } else if (x.over_out == x.under_in) {
    rb.drop_arc(x.over_out);
    rb.merge_arcs(x.over_in, x.under_out);
  } else {
    throw BadSite("crossing " + std::to_string(crossing_id) + " is not a kink");
  }
  return rb.finalize().diagram;
}

inline LinkDiagram r2_add(const LinkDiagram& d, const CrossingSite& site) {
  if (!site.strands || site.is_single_strand())
    throw BadSite("R2 insertion needs two distinct strands");
  for (int lead_sign = 1; lead_sign >= -1; lead_sign -= 2) {
    DiagramRebuilder rb(d);
    const auto sa = open_strand(rb, site.strands->first, d);
    const auto sb = open_strand(rb, site.strands->second, d);
    const int ma = rb.fresh_arc(rb.rank_of(sa.in_arc));
    const int mb = rb.fresh_arc(rb.rank_of(sb.in_arc));
    Crossing c1, c2;
    c1.id = rb.fresh_crossing_id();
    c2.id = rb.fresh_crossing_id();
    c1.sign = lead_sign;
    c2.sign = -lead_sign;
    // Strand a passes over at both crossings.
    c1.over_in = sa.in_arc;
    c1.over_out = ma;
    c2.over_in = ma;
    c2.over_out = sa.out_arc;
    if (site.parallel) {
      c1.under_in = sb.in_arc;
      c1.under_out = mb;
      c2.under_in = mb;
      c2.under_out = sb.out_arc;
    } else {
      c2.under_in = sb.in_arc;
      c2.under_out = mb;
      c1.under_in = mb;
      c1.under_out = sb.out_arc;
    }
    rb.crossings().push_back(c1);
    rb.crossings().push_back(c2);
    try {
      return rb.finalize().diagram;
    } catch (const InconsistentDiagram&) {
      // opposite sign pairing may embed instead
    }
  }
  throw BadSite("strands do not admit a planar R2 insertion");
}

inline LinkDiagram r2_remove(const LinkDiagram& d, int crossing_id) {
  const Crossing c1 = d.crossing_by_id(crossing_id);
  for (const auto& c2 : d.crossings()) {
    if (c2.id == c1.id || c2.sign != -c1.sign) continue;
    // Bigon with both strands running c1 -> c2.
    if (c1.over_out == c2.over_in && c1.under_out == c2.under_in) {
      DiagramRebuilder rb(d);
      rb.remove_crossing(c1.id);
      rb.remove_crossing(c2.id);
      rb.drop_arc(c1.over_out);
      rb.drop_arc(c1.under_out);
      rb.merge_arcs(c1.over_in, c2.over_out);
      rb.merge_arcs(c1.under_in, c2.under_out);
      return rb.finalize().diagram;
    }
    // Bigon with the over strand c1 -> c2 and the under strand c2 -> c1.
    if (c1.over_out == c2.over_in && c2.under_out == c1.under_in) {
      DiagramRebuilder rb(d);
      rb.remove_crossing(c1.id);
      rb.remove_crossing(c2.id);
      rb.drop_arc(c1.over_out);
      rb.drop_arc(c2.under_out);
      rb.merge_arcs(c1.over_in, c2.over_out);
      rb.merge_arcs(c2.under_in, c1.under_out);
      return rb.finalize().diagram;
    }
  }
  throw BadSite("crossing " + std::to_string(crossing_id) +
                " is not part of a removable bigon");
}

// Slides the strand carrying `moving_arc` across the opposite crossing of
// an adjacent triangular face. Signs and over/under roles are preserved;
// only the arc wiring changes: along each of the three strands the order
// of its two triangle crossings swaps, carrying the triangle to the other
// side.
inline LinkDiagram r3_slide(const LinkDiagram& d, int moving_arc, bool prefer_first_face) {
  if (!d.has_arc(moving_arc)) throw BadSite("no arc " + std::to_string(moving_arc));
  const auto& xs = d.crossings();
  const auto maps = build_dart_maps(xs);
  const Dart src = maps.out_dart.at(moving_arc);
  const Dart dst = maps.in_dart.at(moving_arc);
  const int c_a = src.crossing;  // crossing where the moving strand leaves on t
  const int c_b = dst.crossing;  // crossing where t arrives
  if (c_a == c_b) throw BadSite("moving arc is a loop");

  // Triangular faces adjacent to the moving arc.
  std::vector<std::vector<int>> triangles;  // arcs of each 3-face containing t
  for (const auto& face : face_orbits(xs, maps)) {
    if (face.size() != 3) continue;
    std::vector<int> arcs;
    bool has_t = false;
    for (const auto& dart : face) {
      const int a = slot_arc(xs[dart.crossing], dart.slot);
      arcs.push_back(a);
      if (a == moving_arc) has_t = true;
    }
    std::set<int> uniq(arcs.begin(), arcs.end());
    if (has_t && uniq.size() == 3) triangles.push_back(arcs);
  }
  if (triangles.empty()) throw BadSite("moving arc borders no triangular face");
  const auto& tri = prefer_first_face || triangles.size() == 1 ? triangles.front()
                                                               : triangles[1];

  // Identify the side arcs: e1 meets c_a, e2 meets c_b, both meet a common
  // third crossing.
  auto touches = [&](int arc, int crossing) {
    return maps.in_dart.at(arc).crossing == crossing ||
           maps.out_dart.at(arc).crossing == crossing;
  };
  int e1 = 0, e2 = 0;
  for (int a : tri) {
    if (a == moving_arc) continue;
    if (touches(a, c_a))
      e1 = a;
    else if (touches(a, c_b))
      e2 = a;
  }
  if (e1 == 0 || e2 == 0) throw BadSite("face is not an R3 triangle");
  int c_x = -1;
  for (int cand : {maps.in_dart.at(e1).crossing, maps.out_dart.at(e1).crossing}) {
    if (cand != c_a && (touches(e2, cand))) c_x = cand;
  }
  if (c_x < 0 || c_x == c_a || c_x == c_b)
    throw BadSite("face is not an R3 triangle");

  // The three corner relations must admit a total height order; a cyclic
  // over/under pattern has no triple-point transition and is not an R3.
  {
    const auto t_pass_a = pass_of_out_arc(xs[c_a], moving_arc);
    const auto t_pass_b = pass_of_in_arc(xs[c_b], moving_arc);
    const auto e1_pass_x = pass_of_out_arc(xs[c_x], e1)
                               ? pass_of_out_arc(xs[c_x], e1)
                               : pass_of_in_arc(xs[c_x], e1);
    if (!t_pass_a || !t_pass_b || !e1_pass_x)
      throw BadSite("face is not an R3 triangle");
    const bool s_over_a = *t_pass_a == Pass::Over;
    const bool s_over_b = *t_pass_b == Pass::Over;
    const bool a_over_b = *e1_pass_x == Pass::Over;
    if (s_over_a == a_over_b && s_over_b != s_over_a)
      throw BadSite("triangle strands have no top/middle/bottom order");
  }

  std::vector<Crossing> out = xs;

  // Swap the crossing order along one fixed strand: the strand enters its
  // first crossing on `lead_in`, runs along `edge` to the second, and
  // leaves on `tail_out`. Afterwards it visits the crossings in the other
  // order through the same passages.
  auto swap_strand = [&out](int first, Pass first_pass, int second, Pass second_pass,
                            int edge) {
    Crossing& f = out[first];
    Crossing& s = out[second];
    const int lead_in = pass_in(f, first_pass);
    const int tail_out = pass_out(s, second_pass);
    set_pass_in(s, second_pass, lead_in);
    set_pass_out(s, second_pass, edge);
    set_pass_in(f, first_pass, edge);
    set_pass_out(f, first_pass, tail_out);
  };

  auto rewire = [&](int edge) {
    const Dart eo = maps.out_dart.at(edge);
    const Dart ei = maps.in_dart.at(edge);
    const auto from_pass = pass_of_out_arc(xs[eo.crossing], edge);
    const auto to_pass = pass_of_in_arc(xs[ei.crossing], edge);
    if (!from_pass || !to_pass || eo.crossing == ei.crossing)
      throw BadSite("face is not an R3 triangle");
    swap_strand(eo.crossing, *from_pass, ei.crossing, *to_pass, edge);
  };

  rewire(moving_arc);
  rewire(e1);
  rewire(e2);

  // Reassemble with inherited component order.
  DiagramRebuilder rb(d);
  rb.crossings() = out;
  try {
    return rb.finalize().diagram;
  } catch (const InconsistentDiagram&) {
    throw BadSite("triangle does not admit an R3 slide");
  }
}

}  // namespace detail

inline LinkDiagram reidemeister(const LinkDiagram& d, RMove move,
                                const CrossingSite& site, RDirection direction) {
  switch (move) {
    case RMove::R1:
      if (direction == RDirection::Add) {
        if (!site.strands || !site.is_single_strand())
          throw BadSite("R1 insertion needs a single-strand site");
        return add_eight(d, site, site.parallel ? +1 : -1);
      }
      if (!site.crossing) throw BadSite("R1 removal needs a crossing site");
      return detail::r1_remove(d, *site.crossing);
    case RMove::R2:
      if (direction == RDirection::Add) return detail::r2_add(d, site);
      if (!site.crossing) throw BadSite("R2 removal needs a crossing site");
      return detail::r2_remove(d, *site.crossing);
    case RMove::R3:
    default: {
      if (!site.strands || site.strands->first.is_circle)
        throw BadSite("R3 needs the moving arc as its site");
      return detail::r3_slide(d, site.strands->first.value, site.parallel);
    }
  }
}

// Connected sum along two arcs: the target ends of the chosen arcs are
// exchanged after relabeling the second diagram away from the first.
inline LinkDiagram connect_sum(const LinkDiagram& d1, const LinkDiagram& d2, int arc1,
                               int arc2) {
  if (!d1.has_arc(arc1)) throw BadIndex("no arc " + std::to_string(arc1));
  if (!d2.has_arc(arc2)) throw BadIndex("no arc " + std::to_string(arc2));
  int max_arc = 0, max_id = 0;
  for (const auto& comp : d1.components())
    for (int a : comp) max_arc = std::max(max_arc, a);
  for (const auto& x : d1.crossings()) max_id = std::max(max_id, x.id);

  std::vector<Crossing> xs = d1.crossings();
  for (const auto& x : d2.crossings()) {
    Crossing y = x;
    y.id += max_id + 1;
    y.under_in += max_arc;
    y.under_out += max_arc;
    y.over_in += max_arc;
    y.over_out += max_arc;
    xs.push_back(y);
  }
  const int arc2_shifted = arc2 + max_arc;

  auto retarget = [&xs](int from, int to) {
    for (auto& x : xs) {
      if (x.under_in == from) {
        x.under_in = to;
        return;
      }
      if (x.over_in == from) {
        x.over_in = to;
        return;
      }
    }
    throw BadSite("arc has no incoming endpoint");
  };
  retarget(arc1, -1);  // placeholder to avoid double-matching
  retarget(arc2_shifted, arc1);
  for (auto& x : xs) {
    if (x.under_in == -1) x.under_in = arc2_shifted;
    if (x.over_in == -1) x.over_in = arc2_shifted;
  }

  auto cycles = LinkDiagram::trace_cycles(xs);
  std::vector<std::vector<int>> comps;
  for (auto& cy : cycles) comps.push_back(std::move(cy));
  for (const auto& comp : d1.components())
    if (comp.empty()) comps.push_back({});
  for (const auto& comp : d2.components())
    if (comp.empty()) comps.push_back({});
  return LinkDiagram(std::move(xs), std::move(comps));
}

}  // namespace knotflow
