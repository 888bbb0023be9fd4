// Regenerates the fixture corpus shipped under corpus/.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "knotflow/catalog.hpp"
#include "knotflow/geometry.hpp"
#include "knotflow/io.hpp"
#include "knotflow/project.hpp"

using namespace knotflow;

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

// Framings matching the blackboard framing of the fixture's xy-projection,
// so the diagram and geometric helicity routes agree.
FramedGeometricLink with_blackboard_framings(FramedGeometricLink link) {
  const LinkDiagram proj = project_diagram(link);
  for (size_t i = 0; i < link.framings.size(); ++i)
    link.framings[i] = proj.blackboard_framing(static_cast<int>(i));
  return link;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "corpus";
  std::filesystem::create_directories(dir);

  write_file(dir / "unknot.json", serialize_diagram(catalog::unknot()));
  write_file(dir / "unlink2.json", serialize_diagram(catalog::unlink(2)));
  write_file(dir / "unlink3.json", serialize_diagram(catalog::unlink(3)));
  write_file(dir / "eight_plus.json", serialize_diagram(catalog::curl(+1)));
  write_file(dir / "eight_minus.json", serialize_diagram(catalog::curl(-1)));
  write_file(dir / "hopf_plus.json", serialize_diagram(catalog::hopf(+1)));
  write_file(dir / "hopf_minus.json", serialize_diagram(catalog::hopf(-1)));
  write_file(dir / "trefoil_right.json", serialize_diagram(catalog::trefoil_right()));
  write_file(dir / "trefoil_left.json", serialize_diagram(catalog::trefoil_left()));
  write_file(dir / "figure_eight.json", serialize_diagram(catalog::figure_eight()));
  write_file(dir / "whitehead.json", serialize_diagram(catalog::whitehead()));
  write_file(dir / "borromean.json", serialize_diagram(catalog::borromean()));
  write_file(dir / "torus_2_4.json", serialize_diagram(catalog::torus_2_4()));

  write_file(dir / "geom_hopf.json",
             geometric_link_to_json(with_blackboard_framings(catalog::hopf_curves()))
                 .dump(2));
  write_file(
      dir / "geom_torus_2_4.json",
      geometric_link_to_json(with_blackboard_framings(catalog::torus_2_4_curves()))
          .dump(2));
  write_file(dir / "geom_trefoil.json",
             geometric_link_to_json(with_blackboard_framings(catalog::trefoil_fixture()))
                 .dump(2));
  write_file(
      dir / "geom_whitehead.json",
      geometric_link_to_json(with_blackboard_framings(catalog::whitehead_curves()))
          .dump(2));
  return 0;
}
