// Acceptance suite: runs every contract criterion against the shipped
// corpus and prints one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotflow/catalog.hpp"
#include "knotflow/diagram.hpp"
#include "knotflow/geometry.hpp"
#include "knotflow/io.hpp"
#include "knotflow/moves.hpp"
#include "knotflow/phase.hpp"
#include "knotflow/project.hpp"
#include "knotflow/skein.hpp"

#include "support/helpers.hpp"

using namespace knotflow;
namespace fs = std::filesystem;

namespace {

struct Corpus {
  std::map<std::string, LinkDiagram> diagrams;
  std::map<std::string, FramedGeometricLink> geometrics;
};

Corpus load(const std::string& dir) {
  Corpus corpus;
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string name = fs::path(f).filename().string();
    auto j = nlohmann::json::parse(buf.str());
    if (j.contains("components") && j["components"].is_array() &&
        !j["components"].empty() && j["components"][0].is_object())
      corpus.geometrics.emplace(name, parse_geometric_link(buf.str()));
    else
      corpus.diagrams.emplace(name, parse_diagram(buf.str()));
  }
  return corpus;
}

int failures = 0;

void report(int index, const std::string& title, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << index << ". " << title;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++failures;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Eight-surgery sites reachable from a corpus diagram: kink sites on the
// diagram itself, plus the two-strand site of each of its smoothings
// (paired with the smoothed diagram they live on).
std::vector<std::pair<LinkDiagram, CrossingSite>> eight_sites(const LinkDiagram& d) {
  std::vector<std::pair<LinkDiagram, CrossingSite>> sites;
  for (int ci = 0; ci < d.component_count(); ++ci) {
    const auto& comp = d.components()[ci];
    sites.push_back({d, comp.empty() ? CrossingSite::on_circle(ci)
                                     : CrossingSite::on_arc(comp.front())});
  }
  for (const auto& x : d.crossings()) {
    auto sr = smooth_crossing_with_site(d, x.id);
    sites.push_back({std::move(sr.diagram), sr.site});
  }
  return sites;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "corpus";
  Corpus corpus;
  try {
    corpus = load(dir);
  } catch (const std::exception& e) {
    std::cerr << "cannot load corpus from " << dir << ": " << e.what() << "\n";
    return 99;
  }
  if (corpus.diagrams.size() < 10 || corpus.geometrics.size() < 4) {
    std::cerr << "corpus incomplete: " << corpus.diagrams.size() << " diagrams, "
              << corpus.geometrics.size() << " geometric fixtures\n";
    return 99;
  }
  const PhaseParam lambda(0.25);

  // 1. Normalization.
  {
    const auto unknot = parse_diagram(R"({"components":[[]],"crossings":[]})");
    const auto t0 = std::chrono::steady_clock::now();
    const bool one = homflypt(unknot).is_one();
    const double ms = ms_since(t0);
    report(1, "normalization P(unknot) = 1", one && ms < 1.0,
           "exact, " + std::to_string(ms) + " ms");
  }

  // 2. Skein identity at every corpus crossing.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    int checked = 0;
    for (const auto& [name, d] : corpus.diagrams) {
      for (const auto& x : d.crossings()) {
        ok = ok && verify_skein(d, x.id);
        ++checked;
      }
    }
    const double ms = ms_since(t0);
    report(2, "skein identity a^-1 P(L+) - a P(L-) = z P(L0)", ok && ms < 5000.0,
           std::to_string(checked) + " crossings, exact, " + std::to_string(ms) + " ms");
  }

  // 3. Ambient isotopy of P; regular isotopy of psi.
  {
    bool ok = true;
    int moves = 0;
    int r3_total = 0;
    for (const auto& [name, d] : corpus.diagrams) {
      const auto p = homflypt(d);
      const auto base = psi_diagram(d, lambda);
      for (int ci = 0; ci < d.component_count(); ++ci) {
        const auto& comp = d.components()[ci];
        const CrossingSite site = comp.empty() ? CrossingSite::on_circle(ci)
                                               : CrossingSite::on_arc(comp.front());
        for (int sign : {+1, -1}) {
          const auto kinked = add_eight(d, site, sign);  // R1 insertion
          ok = ok && homflypt(kinked) == p;
          const auto ratio = phase_ratio(psi_diagram(kinked, lambda), base);
          ok = ok && ratio.exponent_over_lambda == sign;
          ++moves;
        }
      }
      for (const auto& x : d.crossings()) {
        if (x.under_out == x.over_in || x.over_out == x.under_in) {
          const auto flat = reidemeister(d, RMove::R1, CrossingSite::at_crossing(x.id),
                                         RDirection::Remove);
          ok = ok && homflypt(flat) == p;
          const auto ratio = phase_ratio(psi_diagram(flat, lambda), base);
          ok = ok && (ratio.exponent_over_lambda == 1 || ratio.exponent_over_lambda == -1);
          ++moves;
        }
      }
      // One R2 insertion per orientation when some pair of arcs admits it.
      std::vector<int> arcs;
      for (const auto& comp : d.components())
        for (int a : comp) arcs.push_back(a);
      for (bool parallel : {true, false}) {
        bool done = false;
        for (size_t i = 0; i < arcs.size() && !done; ++i)
          for (size_t j = 0; j < arcs.size() && !done; ++j) {
            if (i == j) continue;
            try {
              const auto moved = reidemeister(
                  d, RMove::R2,
                  CrossingSite::on_strands(StrandRef::arc(arcs[i]),
                                           StrandRef::arc(arcs[j]), parallel),
                  RDirection::Add);
              ok = ok && homflypt(moved) == p;
              ok = ok && psi_diagram(moved, lambda).exponent_over_lambda ==
                             base.exponent_over_lambda;
              done = true;
              ++moves;
            } catch (const BadSite&) {
            }
          }
      }
      // Direct R3 slides where a triangle admits one; reduced alternating
      // diagrams admit none, so also open a braid-like region with an R2
      // slide and exercise the triangles of the widened diagram.
      int r3_here = 0;
      auto try_r3 = [&](const LinkDiagram& base_diagram) {
        for (const auto& comp : base_diagram.components()) {
          for (int a : comp) {
            try {
              const auto moved = reidemeister(base_diagram, RMove::R3,
                                              CrossingSite::on_arc(a), RDirection::Add);
              ok = ok && homflypt(moved) == p;
              ok = ok && psi_diagram(moved, lambda).exponent_over_lambda ==
                             psi_diagram(base_diagram, lambda).exponent_over_lambda;
              ++moves;
              ++r3_here;
            } catch (const BadSite&) {
            }
          }
        }
      };
      try_r3(d);
      if (r3_here == 0 && arcs.size() >= 2) {
        for (size_t i = 0; i < arcs.size() && r3_here == 0; ++i) {
          for (size_t j = 0; j < arcs.size() && r3_here == 0; ++j) {
            if (i == j) continue;
            try {
              const auto widened = reidemeister(
                  d, RMove::R2,
                  CrossingSite::on_strands(StrandRef::arc(arcs[i]),
                                           StrandRef::arc(arcs[j]), true),
                  RDirection::Add);
              try_r3(widened);
            } catch (const BadSite&) {
            }
          }
        }
      }
      r3_total += r3_here;
    }
    report(3, "P ambient-isotopy invariant; psi regular-isotopy invariant",
           ok && r3_total > 0,
           std::to_string(moves) + " rewrites, " + std::to_string(r3_total) +
               " triangle slides");
  }

  // 4. Crossing-switch jumps and component transitions.
  {
    bool ok = true;
    int checked = 0;
    for (const auto& [name, d] : corpus.diagrams) {
      for (const auto& x : d.crossings()) {
        const auto sw = switch_crossing(d, x.id);
        ok = ok && (sw.writhe() - d.writhe() == -2 * x.sign);
        const auto ratio = surgery_ratio(d, CrossingSite::at_crossing(x.id), x.sign, lambda);
        ok = ok && ratio.exponent_over_lambda == -2 * x.sign;
        const auto sm = smooth_crossing(d, x.id);
        ok = ok && std::abs(sm.component_count() - d.component_count()) == 1;
        ++checked;
      }
    }
    report(4, "crossing switches jump writhe by -2 sign and psi by alpha^{-2 sign}; "
              "smoothing shifts components by 1",
           ok, std::to_string(checked) + " crossings");
  }

  // 5. Balance of the two eight-surgery signs.
  {
    bool ok = true;
    int sites = 0;
    for (const auto& [name, d] : corpus.diagrams) {
      for (const auto& [base, site] : eight_sites(d)) {
        ok = ok && verify_eq32(base, site, lambda);
        ++sites;
      }
    }
    report(5, "alpha^-1 psi(L+) - alpha psi(L-) = 0 at all eight-surgery sites", ok,
           std::to_string(sites) + " sites, exact exponents");
  }

  // 6. Trivializing specialization.
  {
    bool ok = true;
    for (const auto& [name, d] : corpus.diagrams)
      ok = ok && specialize_trivial(homflypt(d)).is_one();
    report(6, "z -> a^-1 - a collapses P to 1 on the corpus", ok,
           std::to_string(corpus.diagrams.size()) + " diagrams, exact");
  }

  // 7. Frozen oracle values.
  {
    const auto delta = helpers::poly2({{1, -1, -1}, {-1, 1, -1}});
    const auto hopf_p = helpers::poly2({{1, 1, 1}, {1, 1, -1}, {-1, 3, -1}});
    const auto trefoil_p = helpers::poly2({{-1, 4, 0}, {2, 2, 0}, {1, 2, 2}});
    bool ok = homflypt(corpus.diagrams.at("unlink2.json")) == delta;
    ok = ok && homflypt(corpus.diagrams.at("hopf_plus.json")) == hopf_p;
    ok = ok && homflypt(corpus.diagrams.at("trefoil_right.json")) == trefoil_p;
    ok = ok && specialize_jones(hopf_p) == helpers::poly1({{-1, 1}, {-1, 5}});
    ok = ok && specialize_jones(trefoil_p) == helpers::poly1({{-1, 8}, {1, 6}, {1, 2}});
    report(7, "hand-derived skein values and Jones specializations", ok, "exact");
  }

  // 8. Mirror and reversal symmetry.
  {
    bool ok = true;
    for (const auto& [name, d] : corpus.diagrams) {
      const auto p = homflypt(d);
      ok = ok && homflypt(mirror(d)) == p.subst_alpha_inverse().subst_z_negated();
      ok = ok && homflypt(reverse(d)) == p;
    }
    report(8, "P(mirror)(a,z) = P(a^-1,-z); orientation reversal fixes P", ok,
           std::to_string(corpus.diagrams.size()) + " diagrams, exact");
  }

  // 9. Geometric vs combinatorial linking.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& hopf = corpus.geometrics.at("geom_hopf.json");
    const auto& torus = corpus.geometrics.at("geom_torus_2_4.json");
    const auto& wh = corpus.geometrics.at("geom_whitehead.json");
    const double lk_hopf = polygonal_linking(hopf.components[0], hopf.components[1]);
    const double lk_torus = polygonal_linking(torus.components[0], torus.components[1]);
    const double lk_wh = polygonal_linking(wh.components[0], wh.components[1]);
    const double r_hopf = std::abs(
        lk_hopf - corpus.diagrams.at("hopf_plus.json").linking_number(0, 1));
    const double r_torus = std::abs(
        lk_torus - corpus.diagrams.at("torus_2_4.json").linking_number(0, 1));
    const double ms = ms_since(t0);
    std::ostringstream detail;
    detail << "residuals " << std::scientific << std::setprecision(2) << r_hopf << ", "
           << r_torus << ", |lk(whitehead)| = " << std::abs(lk_wh) << ", "
           << std::fixed << std::setprecision(1) << ms << " ms";
    report(9, "Gauss integrals match diagram linking numbers",
           r_hopf <= 1e-6 && r_torus <= 1e-6 && std::abs(lk_wh) <= 1e-6 && ms < 2000.0,
           detail.str());
  }

  // 10. Helicity decomposition, both routes.
  {
    bool ok = true;
    double worst = 0.0;
    for (const auto& [name, link] : corpus.geometrics) {
      const auto proj = project_diagram(link);
      double expected = 0.0;
      const int n = static_cast<int>(link.components.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) expected += proj.linking_number(i, j);
      for (int fr : link.framings) expected += fr;
      const double res = std::abs(helicity_geometric(link) - expected);
      worst = std::max(worst, res);
      ok = ok && res <= 1e-4;
    }
    for (const auto& [name, d] : corpus.diagrams) ok = ok && d.helicity() == d.writhe();
    std::ostringstream detail;
    detail << "worst geometric residual " << std::scientific << std::setprecision(2)
           << worst << "; diagram route exact";
    report(10, "helicity = sum of linkings + framings; diagram helicity = writhe", ok,
           detail.str());
  }

  // 11. Circulation of the Biot-Savart field.
  {
    bool ok = true;
    double worst = 0.0;
    for (const auto& [name, link] : corpus.geometrics) {
      const int n = static_cast<int>(link.components.size());
      for (int i = 0; i < n; ++i) {
        FramedGeometricLink others;
        double expected = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          others.components.push_back(link.components[j]);
          others.framings.push_back(link.framings[j]);
          expected += polygonal_linking(link.components[i], link.components[j]);
        }
        if (others.components.empty()) continue;
        const double res = std::abs(circulation(others, link.components[i]) - expected);
        worst = std::max(worst, res);
        ok = ok && res <= 1e-4;
      }
    }
    std::ostringstream detail;
    detail << "worst residual " << std::scientific << std::setprecision(2) << worst;
    report(11, "field circulation equals total linking", ok, detail.str());
  }

  // 12. Order independence of the skein recursion.
  {
    std::mt19937 rng(20260810);
    bool ok = true;
    SkeinConfig no_memo;
    no_memo.memo_enabled = false;
    for (const auto& [name, d] : corpus.diagrams) {
      const auto reference = homflypt(d);
      ok = ok && homflypt(d, no_memo) == reference;
      for (int trial = 0; trial < 10; ++trial) {
        const auto ord = random_ordering(d, rng);
        ok = ok && homflypt(d, {}, ord) == reference;
        ok = ok && homflypt(d, no_memo, ord) == reference;
      }
    }
    report(12, "P independent of basepoints, component order, and memoization", ok,
           "10 random orderings per diagram");
  }

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criteria FAILED\n");
  return failures == 0 ? 0 : 1;
}
