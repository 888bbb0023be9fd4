#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "knotflow/errors.hpp"

namespace knotflow {

// One crossing of an oriented link diagram. The four fields name the arcs
// meeting the crossing: the under-strand enters on under_in and leaves on
// under_out, the over-strand likewise. sign is +1 iff rotating the
// over-strand direction counterclockwise by 90 degrees aligns it with the
// under-strand direction.
struct Crossing {
  int id = 0;
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  int sign = +1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

namespace detail {

// Slot indices for the four arc endpoints of a crossing.
enum Slot : int { kUnderIn = 0, kOverIn = 1, kUnderOut = 2, kOverOut = 3 };

inline int slot_arc(const Crossing& x, int slot) {
  switch (slot) {
    case kUnderIn: return x.under_in;
    case kOverIn: return x.over_in;
    case kUnderOut: return x.under_out;
    default: return x.over_out;
  }
}

// Counterclockwise successor slot around a crossing. The crossing sign
// fixes the cyclic order of the four endpoints in the plane:
//   sign +1: under_in, over_out, under_out, over_in
//   sign -1: under_in, over_in, under_out, over_out
inline int next_slot_ccw(int sign, int slot) {
  static constexpr int kPlus[4] = {kOverOut, kUnderIn, kOverIn, kUnderOut};
  static constexpr int kMinus[4] = {kOverIn, kUnderOut, kOverOut, kUnderIn};
  return sign > 0 ? kPlus[slot] : kMinus[slot];
}

inline std::vector<int> rotate_to_min(const std::vector<int>& cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::vector<int> out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

struct Dart {
  int crossing = 0;  // index into the crossing vector
  int slot = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct DartMaps {
  std::map<int, Dart> in_dart;   // arc -> endpoint where it arrives
  std::map<int, Dart> out_dart;  // arc -> endpoint where it departs
};

inline DartMaps build_dart_maps(const std::vector<Crossing>& crossings) {
  DartMaps m;
  for (int k = 0; k < static_cast<int>(crossings.size()); ++k) {
    const auto& x = crossings[k];
    m.in_dart[x.under_in] = {k, kUnderIn};
    m.in_dart[x.over_in] = {k, kOverIn};
    m.out_dart[x.under_out] = {k, kUnderOut};
    m.out_dart[x.over_out] = {k, kOverOut};
  }
  return m;
}

// Boundary walks of the embedding determined by the crossing signs:
// each face is the orbit of dart -> ccw_next(other_end(dart)).
inline std::vector<std::vector<Dart>> face_orbits(const std::vector<Crossing>& crossings,
                                                  const DartMaps& maps) {
  const int c = static_cast<int>(crossings.size());
  std::vector<bool> visited(4 * c, false);
  std::vector<std::vector<Dart>> faces;
  for (int k = 0; k < c; ++k) {
    for (int slot = 0; slot < 4; ++slot) {
      if (visited[4 * k + slot]) continue;
      std::vector<Dart> face;
      int ck = k, cs = slot;
      while (!visited[4 * ck + cs]) {
        visited[4 * ck + cs] = true;
        face.push_back({ck, cs});
        const int arc = slot_arc(crossings[ck], cs);
        const bool incoming = (cs == kUnderIn || cs == kOverIn);
        const Dart& partner = incoming ? maps.out_dart.at(arc) : maps.in_dart.at(arc);
        ck = partner.crossing;
        cs = next_slot_ccw(crossings[ck].sign, partner.slot);
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace detail

// An oriented link diagram: signed crossings joined by labeled arcs, plus
// the list of components as cyclic arc sequences. Components with an empty
// arc sequence are crossing-free circles. Values are immutable after
// construction and every structural invariant is checked up front,
// including that the crossing signs admit a planar realization (the
// rotation system they induce must have genus zero on every connected
// piece of the underlying 4-valent graph).
class LinkDiagram {
public:
  LinkDiagram() = default;

  LinkDiagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> components)
      : crossings_(std::move(crossings)), components_(std::move(components)) {
    validate();
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<std::vector<int>>& components() const { return components_; }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int component_count() const { return static_cast<int>(components_.size()); }

  int free_circle_count() const {
    int n = 0;
    for (const auto& comp : components_)
      if (comp.empty()) ++n;
    return n;
  }

  const Crossing& crossing_by_id(int id) const {
    for (const auto& x : crossings_)
      if (x.id == id) return x;
    throw BadIndex("no crossing with id " + std::to_string(id));
  }

  bool has_crossing(int id) const {
    for (const auto& x : crossings_)
      if (x.id == id) return true;
    return false;
  }

  int component_of_arc(int arc) const {
    auto it = arc_component_.find(arc);
    if (it == arc_component_.end()) throw BadIndex("no arc " + std::to_string(arc));
    return it->second;
  }

  bool has_arc(int arc) const { return arc_component_.count(arc) != 0; }

  // Arc following `arc` along its component's orientation.
  int successor(int arc) const {
    for (const auto& x : crossings_) {
      if (x.under_in == arc) return x.under_out;
      if (x.over_in == arc) return x.over_out;
    }
    throw BadIndex("no arc " + std::to_string(arc));
  }

  int writhe() const {
    int w = 0;
    for (const auto& x : crossings_) w += x.sign;
    return w;
  }

  // Half the sum of the signs of crossings joining components i and j.
  int linking_number(int i, int j) const {
    check_component(i);
    check_component(j);
    if (i == j)
      throw BadIndex("self-linking requires a framing; see blackboard_framing");
    int sum = 0;
    for (const auto& x : crossings_) {
      const int cu = component_of_arc(x.under_in);
      const int co = component_of_arc(x.over_in);
      if ((cu == i && co == j) || (cu == j && co == i)) sum += x.sign;
    }
    return sum / 2;
  }

  // Self-writhe of component j; this is ell(j,j) under the blackboard framing.
  int blackboard_framing(int j) const {
    check_component(j);
    int sum = 0;
    for (const auto& x : crossings_) {
      if (component_of_arc(x.under_in) == j && component_of_arc(x.over_in) == j)
        sum += x.sign;
    }
    return sum;
  }

  // Sum of framings plus the ordered-pair sum of linking numbers. Equals
  // the writhe for every diagram.
  int helicity() const {
    const int n = component_count();
    int h = 0;
    for (int j = 0; j < n; ++j) h += blackboard_framing(j);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) h += linking_number(i, j);
    return h;
  }

  // Linking numbers off the diagonal, blackboard framings on it.
  std::vector<std::vector<int>> linking_matrix() const {
    const int n = component_count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i][j] = (i == j) ? blackboard_framing(i) : linking_number(i, j);
    return m;
  }

  // Deterministic normal form: lexicographically minimal serialization over
  // component orderings and per-component starting arcs. Diagrams equal up
  // to arc relabeling (and crossing ids) produce identical keys.
  std::string canonical_key() const;

  // Cyclic arc sequences implied by a crossing list alone.
  static std::vector<std::vector<int>> trace_cycles(const std::vector<Crossing>& crossings);

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.components_ == b.components_;
  }

private:
  void check_component(int i) const {
    if (i < 0 || i >= component_count())
      throw BadIndex("no component " + std::to_string(i));
  }

  void validate();

  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> components_;
  std::map<int, int> arc_component_;
};

inline std::vector<std::vector<int>> LinkDiagram::trace_cycles(
    const std::vector<Crossing>& crossings) {
  std::map<int, int> next;
  for (const auto& x : crossings) {
    next[x.under_in] = x.under_out;
    next[x.over_in] = x.over_out;
  }
  std::vector<std::vector<int>> cycles;
  std::set<int> seen;
  for (const auto& [arc, _] : next) {
    if (seen.count(arc)) continue;
    std::vector<int> cycle;
    int cur = arc;
    while (!seen.count(cur)) {
      seen.insert(cur);
      cycle.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end())
        throw InconsistentDiagram("open traversal at arc " + std::to_string(cur));
      cur = it->second;
    }
    if (cur != arc)
      throw InconsistentDiagram("traversal from arc " + std::to_string(arc) +
                                " does not close");
    cycles.push_back(detail::rotate_to_min(cycle));
  }
  return cycles;
}

inline void LinkDiagram::validate() {
  using detail::slot_arc;

  std::set<int> ids;
  for (const auto& x : crossings_) {
    if (!ids.insert(x.id).second)
      throw InconsistentDiagram("duplicate crossing id " + std::to_string(x.id));
    if (x.sign != 1 && x.sign != -1)
      throw InconsistentDiagram("crossing " + std::to_string(x.id) +
                                " has sign " + std::to_string(x.sign));
    for (int slot = 0; slot < 4; ++slot)
      if (slot_arc(x, slot) <= 0)
        throw InconsistentDiagram("crossing " + std::to_string(x.id) +
                                  " references non-positive arc label");
  }

  // Every arc label must occur exactly once as an incoming endpoint and
  // exactly once as an outgoing endpoint.
  std::map<int, int> in_count, out_count;
  for (const auto& x : crossings_) {
    ++in_count[x.under_in];
    ++in_count[x.over_in];
    ++out_count[x.under_out];
    ++out_count[x.over_out];
  }
  std::set<int> arcs;
  for (const auto& [a, _] : in_count) arcs.insert(a);
  for (const auto& [a, _] : out_count) arcs.insert(a);
  for (int a : arcs) {
    if (in_count[a] != 1 || out_count[a] != 1)
      throw InconsistentDiagram("arc " + std::to_string(a) + " appears " +
                                std::to_string(in_count[a] + out_count[a]) +
                                " times across crossing endpoints");
  }

  // Declared components must reproduce the traversal cycles.
  auto cycles = trace_cycles(crossings_);
  std::multiset<std::vector<int>> expected(cycles.begin(), cycles.end());
  std::multiset<std::vector<int>> declared;
  arc_component_.clear();
  for (int ci = 0; ci < static_cast<int>(components_.size()); ++ci) {
    const auto& comp = components_[ci];
    if (comp.empty()) continue;  // crossing-free circle
    declared.insert(detail::rotate_to_min(comp));
    for (int a : comp) {
      if (!arcs.count(a))
        throw InconsistentDiagram("component lists arc " + std::to_string(a) +
                                  " that no crossing references");
      if (!arc_component_.emplace(a, ci).second)
        throw InconsistentDiagram("arc " + std::to_string(a) +
                                  " listed in more than one component");
    }
  }
  if (declared != expected)
    throw InconsistentDiagram(
        "declared components do not match the orientation traversal");
  if (arc_component_.size() != arcs.size())
    throw InconsistentDiagram("components do not partition the arcs");

  // Jordan-curve parity: two closed curves in the plane cross evenly.
  const int n = component_count();
  std::vector<std::vector<int>> inter(n, std::vector<int>(n, 0));
  for (const auto& x : crossings_) {
    const int cu = arc_component_.at(x.under_in);
    const int co = arc_component_.at(x.over_in);
    if (cu != co) {
      ++inter[cu][co];
      ++inter[co][cu];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (inter[i][j] % 2 != 0)
        throw InconsistentDiagram("components " + std::to_string(i) + " and " +
                                  std::to_string(j) + " cross an odd number of times");

  // Sign consistency: the rotation system induced by the signs must embed
  // every connected piece of the diagram graph in the sphere (genus zero).
  const int c = crossing_count();
  if (c == 0) return;

  const auto maps = detail::build_dart_maps(crossings_);

  // Union-find over crossings to find connected pieces.
  std::vector<int> parent(c);
  for (int k = 0; k < c; ++k) parent[k] = k;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, d] : maps.in_dart)
    parent[find(d.crossing)] = find(maps.out_dart.at(a).crossing);

  std::vector<int> faces_per_piece(c, 0);
  for (const auto& face : detail::face_orbits(crossings_, maps))
    ++faces_per_piece[find(face.front().crossing)];

  std::map<int, int> piece_vertices, piece_edges;
  for (int k = 0; k < c; ++k) ++piece_vertices[find(k)];
  for (const auto& [a, d] : maps.in_dart) {
    (void)a;
    ++piece_edges[find(d.crossing)];
  }
  for (const auto& [piece, v] : piece_vertices) {
    const int e = piece_edges[piece];
    const int f = faces_per_piece[piece];
    if (v - e + f != 2)
      throw InconsistentDiagram(
          "crossing signs are inconsistent with the orientation traversal "
          "(no planar realization)");
  }
}

inline std::string LinkDiagram::canonical_key() const {
  // Collect non-empty components; free circles only contribute a count.
  std::vector<const std::vector<int>*> comps;
  for (const auto& comp : components_)
    if (!comp.empty()) comps.push_back(&comp);
  const int free_circles = free_circle_count();

  // Components are listed by length; only equal-length components can swap
  // under relabeling, so permutations run within length groups.
  std::vector<int> order(comps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return comps[a]->size() < comps[b]->size(); });
  std::vector<std::pair<size_t, size_t>> groups;  // [begin, end) with equal length
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j < order.size() && comps[order[j]]->size() == comps[order[i]]->size()) ++j;
    groups.push_back({i, j});
    i = j;
  }

  std::string best;
  bool more_orders = true;
  while (more_orders) {
    // Choose a rotation for each component; enumerate products iteratively.
    std::vector<int> rotation(comps.size(), 0);
    bool more = true;
    while (more) {
      std::map<int, int> relabel;
      int next_label = 1;
      for (size_t oi = 0; oi < order.size(); ++oi) {
        const auto& comp = *comps[order[oi]];
        const int len = static_cast<int>(comp.size());
        for (int k = 0; k < len; ++k)
          relabel[comp[(rotation[oi] + k) % len]] = next_label++;
      }
      std::vector<std::array<int, 5>> rows;
      rows.reserve(crossings_.size());
      for (const auto& x : crossings_)
        rows.push_back({relabel.at(x.under_in), relabel.at(x.under_out),
                        relabel.at(x.over_in), relabel.at(x.over_out), x.sign});
      std::sort(rows.begin(), rows.end());
      std::ostringstream key;
      key << "f" << free_circles << "|c";
      for (size_t oi = 0; oi < order.size(); ++oi) key << comps[order[oi]]->size() << ",";
      key << "|";
      for (const auto& r : rows)
        key << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << ","
            << (r[4] > 0 ? "+" : "-") << ";";
      std::string candidate = key.str();
      if (best.empty() || candidate < best) best = std::move(candidate);

      // Advance the mixed-radix rotation counter.
      more = false;
      for (size_t oi = 0; oi < rotation.size(); ++oi) {
        if (++rotation[oi] < static_cast<int>(comps[order[oi]]->size())) {
          more = true;
          break;
        }
        rotation[oi] = 0;
      }
      if (rotation.empty()) break;
    }
    // Advance the order odometer one length-group at a time.
    more_orders = false;
    for (auto& [begin, end] : groups) {
      if (std::next_permutation(order.begin() + begin, order.begin() + end)) {
        more_orders = true;
        break;
      }
    }
  }
  if (best.empty()) best = "f" + std::to_string(free_circles) + "|c|";
  return best;
}

// Applies an arc relabeling. The map must be a bijection on the diagram's
// arc labels; crossing ids and component order are preserved.
inline LinkDiagram relabel_arcs(const LinkDiagram& d, const std::map<int, int>& perm) {
  auto mapped = [&perm](int a) {
    auto it = perm.find(a);
    if (it == perm.end()) throw BadIndex("relabel map misses arc " + std::to_string(a));
    return it->second;
  };
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) {
    x.under_in = mapped(x.under_in);
    x.under_out = mapped(x.under_out);
    x.over_in = mapped(x.over_in);
    x.over_out = mapped(x.over_out);
  }
  std::vector<std::vector<int>> comps = d.components();
  for (auto& comp : comps)
    for (auto& a : comp) a = mapped(a);
  return LinkDiagram(std::move(xs), std::move(comps));
}

}  // namespace knotflow
