#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "knotflow/diagram.hpp"
#include "knotflow/errors.hpp"

namespace knotflow {

// Diagram of the closure of a braid word on `strands` strands. A letter
// +j crosses positions j and j+1 with crossing sign +1, -j with sign -1
// (all strands coherently oriented, so braid letter signs are crossing
// signs). Positions untouched by the word close into free circles.
inline LinkDiagram from_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw MalformedInput("braid needs at least one strand");
  std::vector<int> initial(strands), at_position(strands);
  int next_arc = 1;
  for (int i = 0; i < strands; ++i) initial[i] = at_position[i] = next_arc++;

  std::vector<Crossing> xs;
  int next_id = 1;
  for (int letter : word) {
    const int j = std::abs(letter);
    if (letter == 0 || j >= strands)
      throw MalformedInput("braid letter " + std::to_string(letter) +
                           " out of range for " + std::to_string(strands) + " strands");
    const int left = at_position[j - 1];
    const int right = at_position[j];
    const int new_left = next_arc++;
    const int new_right = next_arc++;
    Crossing x;
    x.id = next_id++;
    x.sign = letter > 0 ? +1 : -1;
    if (letter > 0) {
      // Positive crossing: the strand arriving from the right passes over.
      x.over_in = right;
      x.over_out = new_left;
      x.under_in = left;
      x.under_out = new_right;
    } else {
      x.over_in = left;
      x.over_out = new_right;
      x.under_in = right;
      x.under_out = new_left;
    }
    xs.push_back(x);
    at_position[j - 1] = new_left;
    at_position[j] = new_right;
  }

  // Close up: the arc leaving the bottom of position i is the arc entering
  // the top of position i.
  int free_circles = 0;
  for (int i = 0; i < strands; ++i) {
    if (at_position[i] == initial[i]) {
      ++free_circles;  // this strand met no crossing
      continue;
    }
    for (auto& x : xs) {
      if (x.under_out == at_position[i]) x.under_out = initial[i];
      if (x.over_out == at_position[i]) x.over_out = initial[i];
    }
  }

  auto comps = LinkDiagram::trace_cycles(xs);
  std::sort(comps.begin(), comps.end());
  for (int i = 0; i < free_circles; ++i) comps.push_back({});
  return LinkDiagram(std::move(xs), std::move(comps));
}

}  // namespace knotflow
