// knotflow: command-line front end for link invariants, helicity phases,
// geometric helicity, and corpus verification suites.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "knotflow/catalog.hpp"
#include "knotflow/diagram.hpp"
#include "knotflow/errors.hpp"
#include "knotflow/geometry.hpp"
#include "knotflow/io.hpp"
#include "knotflow/moves.hpp"
#include "knotflow/phase.hpp"
#include "knotflow/project.hpp"
#include "knotflow/skein.hpp"

namespace {

using namespace knotflow;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitTolerance = 3;

struct Check {
  std::string name;
  bool pass = true;
  double residual = 0.0;
};

struct RunReport {
  std::string command;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<Check> checks;
  double wall_ms = 0.0;

  void print_text(std::ostream& out) const {
    out << "command: " << command << "\n";
    out << "inputs: " << digest << "\n";
    for (const auto& [key, value] : results) out << key << ": " << value << "\n";
    int passed = 0;
    for (const auto& c : checks) {
      out << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
      out << " (residual " << std::setprecision(6) << c.residual << ")\n";
      if (c.pass) ++passed;
    }
    if (!checks.empty())
      out << "checks: " << passed << "/" << checks.size() << " passed\n";
    out << "wall_time_ms: " << std::setprecision(3) << std::fixed << wall_ms << "\n";
  }

  void print_json(std::ostream& out) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs_digest"] = digest;
    for (const auto& [key, value] : results) {
      // Results whose value is itself JSON embed as objects.
      if (!value.empty() && (value.front() == '{' || value.front() == '[')) {
        j["results"][key] = nlohmann::ordered_json::parse(value);
      } else {
        j["results"][key] = value;
      }
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    j["wall_time_ms"] = wall_ms;
    out << j.dump(2) << "\n";
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_geometric(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("components")) return false;
  const auto& comps = j["components"];
  return comps.is_array() && !comps.empty() && comps[0].is_object();
}

std::string poly2_json(const LaurentPoly2& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({c.str(), e.first, e.second});
  nlohmann::ordered_json j;
  j["text"] = p.to_text();
  j["terms"] = terms;  // [coeff, e_alpha, e_z], ascending lexicographic
  return j.dump();
}

std::string poly1_json(const LaurentPoly1H& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({c.str(), e});
  nlohmann::ordered_json j;
  j["text"] = p.to_text();
  j["terms"] = terms;
  return j.dump();
}

std::string format_real(double v, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

std::string phase_json(const Phase& ph) {
  nlohmann::ordered_json j;
  j["psi"] = {{"re", ph.value.real()}, {"im", ph.value.imag()}};
  if (ph.exponent_over_lambda)
    j["exponent_over_lambda"] = *ph.exponent_over_lambda;
  else
    j["exponent_over_lambda"] = nullptr;
  j["lambda"] = ph.lambda;
  return j.dump();
}

struct LoadedInput {
  std::optional<LinkDiagram> diagram;
  std::optional<FramedGeometricLink> geometric;
};

LoadedInput load_input(const std::string& path, bool force_geometric, int segments) {
  const std::string text = read_file(path);
  LoadedInput in;
  if (force_geometric || looks_geometric(text)) {
    auto link = parse_geometric_link(text);
    if (segments > 0) {
      for (auto& comp : link.components) {
        int factor = 1;
        while (comp.segment_count() * factor < segments) ++factor;
        comp = subdivide(comp, factor);
      }
    }
    in.geometric = std::move(link);
  } else {
    in.diagram = parse_diagram(text);
  }
  return in;
}

// ---- invariant ---------------------------------------------------------

int run_invariant(const std::string& what, const std::string& path, bool geometric,
                  int segments, bool json_mode) {
  RunReport report;
  report.command = "invariant " + what + " " + path;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = read_file(path);
  report.digest = fnv1a_digest(text);
  auto input = load_input(path, geometric, segments);
  int exit_code = kExitOk;

  if (what == "homfly" || what == "jones") {
    if (!input.diagram)
      throw MalformedInput(what + " needs a diagram input");
    const LaurentPoly2 p = homflypt(*input.diagram);
    if (what == "homfly") {
      report.results.push_back({"homfly", p.to_text()});
      if (json_mode) report.results.push_back({"homfly_json", poly2_json(p)});
    } else {
      const LaurentPoly1H v = specialize_jones(p);
      report.results.push_back({"jones", v.to_text()});
      if (json_mode) report.results.push_back({"jones_json", poly1_json(v)});
    }
  } else if (what == "writhe") {
    if (!input.diagram) throw MalformedInput("writhe needs a diagram input");
    report.results.push_back({"writhe", std::to_string(input.diagram->writhe())});
  } else if (what == "linking") {
    if (input.diagram) {
      const auto m = input.diagram->linking_matrix();
      nlohmann::ordered_json mj = nlohmann::ordered_json::array();
      for (const auto& row : m) mj.push_back(row);
      report.results.push_back({"linking_matrix", mj.dump()});
    } else {
      const auto& link = *input.geometric;
      nlohmann::ordered_json mj = nlohmann::ordered_json::array();
      for (size_t i = 0; i < link.components.size(); ++i) {
        std::vector<double> row(link.components.size(), 0.0);
        row[i] = link.framings[i];
        for (size_t j = 0; j < link.components.size(); ++j) {
          if (i == j) continue;
          const double lk = polygonal_linking(link.components[i], link.components[j]);
          row[j] = lk;
          if (std::abs(lk - std::round(lk)) > 1e-6) exit_code = kExitTolerance;
        }
        mj.push_back(row);
      }
      report.results.push_back({"linking_matrix", mj.dump()});
      if (exit_code == kExitTolerance)
        report.checks.push_back({"linking_near_integer", false, 1.0});
    }
  } else if (what == "helicity") {
    if (input.diagram) {
      report.results.push_back({"helicity", std::to_string(input.diagram->helicity())});
    } else {
      const double h = helicity_geometric(*input.geometric);
      report.results.push_back({"helicity", format_real(h)});
      const double drift = std::abs(h - std::round(h));
      if (drift > 1e-4) {
        report.checks.push_back({"helicity_near_integer", false, drift});
        exit_code = kExitTolerance;
      }
    }
  } else {
    throw MalformedInput("unknown invariant \"" + what + "\"");
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  json_mode ? report.print_json(std::cout) : report.print_text(std::cout);
  return exit_code;
}

// ---- psi ---------------------------------------------------------------

int run_psi(const std::string& path, double lambda, bool geometric, int segments,
            bool json_mode) {
  RunReport report;
  report.command = "psi " + path;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = read_file(path);
  report.digest = fnv1a_digest(text);
  const PhaseParam param(lambda);
  if (param.degenerate())
    std::cerr << "warning: integer lambda makes psi identically 1\n";
  auto input = load_input(path, geometric, segments);
  const Phase ph = input.diagram ? psi_diagram(*input.diagram, param)
                                 : psi_geometric(*input.geometric, param);
  report.results.push_back({"psi", phase_json(ph)});
  report.results.push_back(
      {"alpha", phase_json(alpha_of(lambda))});
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  json_mode ? report.print_json(std::cout) : report.print_text(std::cout);
  return kExitOk;
}

// ---- verify ------------------------------------------------------------

struct CorpusEntry {
  std::string name;
  std::optional<LinkDiagram> diagram;
  std::optional<FramedGeometricLink> geometric;
};

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> corpus;
  for (const auto& f : files) {
    CorpusEntry e;
    e.name = fs::path(f).filename().string();
    const std::string text = read_file(f);
    if (looks_geometric(text))
      e.geometric = parse_geometric_link(text);
    else
      e.diagram = parse_diagram(text);
    corpus.push_back(std::move(e));
  }
  if (corpus.empty()) throw MalformedInput("no .json fixtures in " + dir);
  return corpus;
}

void suite_skein(const std::vector<CorpusEntry>& corpus, unsigned seed,
                 std::vector<Check>& checks) {
  std::mt19937 rng(seed);
  for (const auto& e : corpus) {
    if (!e.diagram) continue;
    const auto& d = *e.diagram;
    for (const auto& x : d.crossings()) {
      const bool ok = verify_skein(d, x.id);
      checks.push_back({e.name + " skein@" + std::to_string(x.id), ok, ok ? 0.0 : 1.0});
    }
    const auto ord = random_ordering(d, rng);
    const bool same = homflypt(d) == homflypt(d, {}, ord);
    checks.push_back({e.name + " order-independence", same, same ? 0.0 : 1.0});
  }
}

void suite_reidemeister(const std::vector<CorpusEntry>& corpus,
                        std::vector<Check>& checks) {
  for (const auto& e : corpus) {
    if (!e.diagram) continue;
    const auto& d = *e.diagram;
    const LaurentPoly2 p = homflypt(d);
    int applied = 0;
    auto check_same = [&](const LinkDiagram& moved, const std::string& label) {
      const bool same = homflypt(moved) == p;
      checks.push_back({e.name + " " + label, same, same ? 0.0 : 1.0});
      ++applied;
    };
    // R1 kinks on the first arc (or a free circle) of each component.
    for (int ci = 0; ci < d.component_count(); ++ci) {
      const auto& comp = d.components()[ci];
      const CrossingSite site = comp.empty() ? CrossingSite::on_circle(ci)
                                             : CrossingSite::on_arc(comp.front());
      check_same(add_eight(d, site, +1), "R1+@c" + std::to_string(ci));
      check_same(add_eight(d, site, -1), "R1-@c" + std::to_string(ci));
    }
    // R1 removals at every kink.
    for (const auto& x : d.crossings()) {
      if (x.under_out == x.over_in || x.over_out == x.under_in)
        check_same(reidemeister(d, RMove::R1, CrossingSite::at_crossing(x.id),
                                RDirection::Remove),
                   "R1rm@" + std::to_string(x.id));
    }
    // R2 over the first coherent arc pair that embeds, both orientations.
    const auto arcs = [&] {
      std::vector<int> all;
      for (const auto& comp : d.components())
        for (int a : comp) all.push_back(a);
      return all;
    }();
    for (bool parallel : {true, false}) {
      bool done = false;
      for (size_t i = 0; i < arcs.size() && !done; ++i) {
        for (size_t j = 0; j < arcs.size() && !done; ++j) {
          if (i == j) continue;
          try {
            check_same(
                reidemeister(d, RMove::R2,
                             CrossingSite::on_strands(StrandRef::arc(arcs[i]),
                                                      StrandRef::arc(arcs[j]), parallel),
                             RDirection::Add),
                std::string("R2") + (parallel ? "par" : "anti"));
            done = true;
          } catch (const BadSite&) {
          }
        }
      }
    }
    // R2 removals at every bigon.
    for (const auto& x : d.crossings()) {
      try {
        check_same(reidemeister(d, RMove::R2, CrossingSite::at_crossing(x.id),
                                RDirection::Remove),
                   "R2rm@" + std::to_string(x.id));
      } catch (const BadSite&) {
      }
    }
    // R3 at every triangular face; when the diagram is taut (reduced
    // alternating), open a braid-like region with an R2 slide first.
    int r3_count = 0;
    auto try_r3 = [&](const LinkDiagram& base, const std::string& tag) {
      for (const auto& comp : base.components()) {
        for (int a : comp) {
          try {
            const auto moved =
                reidemeister(base, RMove::R3, CrossingSite::on_arc(a), RDirection::Add);
            const bool same = homflypt(moved) == p;
            checks.push_back({e.name + " " + tag + std::to_string(a), same,
                              same ? 0.0 : 1.0});
            ++applied;
            ++r3_count;
          } catch (const BadSite&) {
          }
        }
      }
    };
    try_r3(d, "R3@");
    if (r3_count == 0 && arcs.size() >= 2) {
      for (size_t i = 0; i < arcs.size() && r3_count == 0; ++i) {
        for (size_t j = 0; j < arcs.size() && r3_count == 0; ++j) {
          if (i == j) continue;
          try {
            const auto widened = reidemeister(
                d, RMove::R2,
                CrossingSite::on_strands(StrandRef::arc(arcs[i]),
                                         StrandRef::arc(arcs[j]), true),
                RDirection::Add);
            try_r3(widened, "R2+R3@");
          } catch (const BadSite&) {
          }
        }
      }
    }
    if (applied == 0)
      checks.push_back({e.name + " no-applicable-moves", false, 1.0});
  }
}

void suite_maslov(const std::vector<CorpusEntry>& corpus, double lambda,
                  std::vector<Check>& checks) {
  const PhaseParam param(lambda);
  for (const auto& e : corpus) {
    if (!e.diagram) continue;
    const auto& d = *e.diagram;
    for (const auto& x : d.crossings()) {
      const LinkDiagram sw = switch_crossing(d, x.id);
      const bool writhe_jump = sw.writhe() - d.writhe() == -2 * x.sign;
      const Phase ratio =
          surgery_ratio(d, CrossingSite::at_crossing(x.id), x.sign, param);
      const bool ratio_ok = ratio.exponent_over_lambda &&
                            *ratio.exponent_over_lambda == -2 * x.sign;
      checks.push_back({e.name + " switch@" + std::to_string(x.id),
                        writhe_jump && ratio_ok, writhe_jump && ratio_ok ? 0.0 : 1.0});
      const LinkDiagram sm = smooth_crossing(d, x.id);
      const int delta = std::abs(sm.component_count() - d.component_count());
      checks.push_back({e.name + " smooth@" + std::to_string(x.id), delta == 1,
                        static_cast<double>(std::abs(delta - 1))});
    }
    for (int ci = 0; ci < d.component_count(); ++ci) {
      const auto& comp = d.components()[ci];
      const CrossingSite site = comp.empty() ? CrossingSite::on_circle(ci)
                                             : CrossingSite::on_arc(comp.front());
      const bool ok = verify_eq32(d, site, param);
      checks.push_back({e.name + " eq32@c" + std::to_string(ci), ok, ok ? 0.0 : 1.0});
    }
  }
}

void suite_trivialize(const std::vector<CorpusEntry>& corpus,
                      std::vector<Check>& checks) {
  for (const auto& e : corpus) {
    if (!e.diagram) continue;
    const LaurentPoly1H t = specialize_trivial(homflypt(*e.diagram));
    const bool ok = t.is_one();
    checks.push_back({e.name + " trivialize", ok, ok ? 0.0 : 1.0});
  }
}

void suite_geom_consistency(const std::vector<CorpusEntry>& corpus, double lambda,
                            std::vector<Check>& checks) {
  const PhaseParam param(lambda);
  for (const auto& e : corpus) {
    if (!e.geometric) continue;
    const auto& link = *e.geometric;
    const LinkDiagram proj = project_diagram(link);

    const int n = static_cast<int>(link.components.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double lk = polygonal_linking(link.components[i], link.components[j]);
        const double res = std::abs(lk - proj.linking_number(i, j));
        checks.push_back({e.name + " linking " + std::to_string(i) + "," +
                              std::to_string(j),
                          res <= 1e-6, res});
      }
    }

    const double h = helicity_geometric(link);
    const double h_res = std::abs(h - proj.helicity());
    checks.push_back({e.name + " helicity-decomposition", h_res <= 1e-4, h_res});
    checks.push_back({e.name + " diagram-helicity==writhe",
                      proj.helicity() == proj.writhe(),
                      static_cast<double>(std::abs(proj.helicity() - proj.writhe()))});

    const Phase pg = psi_geometric(link, param);
    const Phase pd = psi_diagram(proj, param);
    const double angle = std::abs(std::arg(pg.value / pd.value));
    checks.push_back({e.name + " psi-agreement", angle <= 1e-4, angle});

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
      const double circ = circulation(others, link.components[i]);
      const double res = std::abs(circ - expected);
      checks.push_back({e.name + " circulation " + std::to_string(i), res <= 1e-4, res});
    }
  }
}

int run_verify(const std::string& suite, const std::string& dir, double lambda,
               unsigned seed, bool json_mode) {
  RunReport report;
  report.command = "verify " + suite + " " + dir;
  const auto t0 = std::chrono::steady_clock::now();
  auto corpus = load_corpus(dir);
  std::string digest_input;
  for (const auto& e : corpus) digest_input += e.name + ";";
  report.digest = fnv1a_digest(digest_input);

  if (suite == "skein")
    suite_skein(corpus, seed, report.checks);
  else if (suite == "reidemeister")
    suite_reidemeister(corpus, report.checks);
  else if (suite == "maslov")
    suite_maslov(corpus, lambda, report.checks);
  else if (suite == "trivialize")
    suite_trivialize(corpus, report.checks);
  else if (suite == "geom-consistency")
    suite_geom_consistency(corpus, lambda, report.checks);
  else
    throw MalformedInput("unknown suite \"" + suite + "\"");

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  json_mode ? report.print_json(std::cout) : report.print_text(std::cout);
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotflow: skein-relation link invariants and helicity phases"};
  app.require_subcommand(1);

  std::string what, path, dir, suite;
  double lambda = 0.25;
  int segments = 0;
  unsigned seed = 0;
  bool geometric = false, json_mode = false;

  auto* inv = app.add_subcommand("invariant", "compute a link invariant");
  inv->add_option("kind", what, "homfly|jones|writhe|linking|helicity")->required();
  inv->add_option("input", path, "diagram or geometric link JSON")->required();
  inv->add_flag("--geometric", geometric, "treat input as a geometric link");
  inv->add_option("--segments", segments, "densify geometric fixtures to >= n vertices");
  inv->add_flag("--json", json_mode, "machine-readable report");

  auto* psi = app.add_subcommand("psi", "evaluate the helicity phase");
  psi->add_option("input", path)->required();
  psi->add_option("--lambda", lambda, "phase parameter (alpha = e^{2 pi i lambda})");
  psi->add_flag("--geometric", geometric);
  psi->add_option("--segments", segments);
  psi->add_flag("--json", json_mode);

  auto* verify = app.add_subcommand("verify", "run a property suite over a corpus");
  verify->add_option("suite", suite,
                     "skein|reidemeister|maslov|trivialize|geom-consistency")
      ->required();
  verify->add_option("corpus", dir, "directory of fixture JSON files")->required();
  verify->add_option("--lambda", lambda);
  verify->add_option("--seed", seed, "seed for ordering shuffles");
  verify->add_flag("--json", json_mode);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return run_invariant(what, path, geometric, segments, json_mode);
    if (psi->parsed()) return run_psi(path, lambda, geometric, segments, json_mode);
    return run_verify(suite, dir, lambda, seed, json_mode);
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InconsistentDiagram& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CurvesTooClose& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
