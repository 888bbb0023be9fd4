#pragma once

#include <random>
#include <vector>

#include "knotflow/braid.hpp"
#include "knotflow/diagram.hpp"
#include "knotflow/laurent.hpp"

namespace helpers {

inline knotflow::LaurentPoly2 poly2(
    std::initializer_list<std::tuple<long, int, int>> terms) {
  knotflow::LaurentPoly2 p;
  for (const auto& [c, ea, ez] : terms)
    p = p + knotflow::LaurentPoly2::mono(c, ea, ez);
  return p;
}

inline knotflow::LaurentPoly1H poly1(std::initializer_list<std::pair<long, int>> terms) {
  knotflow::LaurentPoly1H p;
  for (const auto& [c, e] : terms) p = p + knotflow::LaurentPoly1H::mono(c, e);
  return p;
}

inline knotflow::LaurentPoly2 random_poly2(std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> expo(-4, 4);
  std::uniform_int_distribution<int> coeff(-9, 9);
  knotflow::LaurentPoly2 p;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i)
    p = p + knotflow::LaurentPoly2::mono(coeff(rng), expo(rng), expo(rng));
  return p;
}

inline knotflow::LaurentPoly1H random_poly1(std::mt19937& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> expo(-4, 4);
  std::uniform_int_distribution<int> coeff(-9, 9);
  knotflow::LaurentPoly1H p;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i)
    p = p + knotflow::LaurentPoly1H::mono(coeff(rng), expo(rng));
  return p;
}

// Random valid diagram: the closure of a random braid word.
inline knotflow::LinkDiagram random_braid_diagram(std::mt19937& rng,
                                                  int max_strands = 3,
                                                  int max_letters = 7) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  const int strands = strands_dist(rng);
  std::uniform_int_distribution<int> len_dist(1, max_letters);
  std::uniform_int_distribution<int> pos_dist(1, strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<int> word(len_dist(rng));
  for (auto& letter : word) letter = pos_dist(rng) * (sign_dist(rng) ? 1 : -1);
  return knotflow::from_braid(strands, word);
}

}  // namespace helpers
