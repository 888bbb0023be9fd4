#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "knotflow/catalog.hpp"
#include "knotflow/geometry.hpp"
#include "knotflow/project.hpp"

using namespace knotflow;
using Catch::Approx;

namespace {

PolyCurve reflected_x(const PolyCurve& c) {
  PolyCurve r = c;
  for (auto& v : r.vertices) v.x = -v.x;
  return r;
}

}  // namespace

TEST_CASE("linking of the Hopf configuration") {
  const auto hopf = catalog::hopf_curves(200);
  const double lk = polygonal_linking(hopf.components[0], hopf.components[1]);
  CHECK(lk == Approx(1.0).margin(1e-6));
  // Matches the combinatorial route through the projection.
  const auto proj = project_diagram(hopf);
  CHECK(std::lround(lk) == proj.linking_number(0, 1));
}

TEST_CASE("distant circles do not link") {
  const auto a = catalog::circle_curve({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, 64);
  const auto b = catalog::circle_curve({10, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, 64);
  CHECK(polygonal_linking(a, b) == Approx(0.0).margin(1e-6));
}

TEST_CASE("torus link pair links twice") {
  const auto t24 = catalog::torus_2_4_curves(200);
  const double lk = polygonal_linking(t24.components[0], t24.components[1]);
  CHECK(lk == Approx(2.0).margin(1e-6));
}

TEST_CASE("linking symmetry, orientation, and subdivision") {
  const auto hopf = catalog::hopf_curves(60);
  const auto& a = hopf.components[0];
  const auto& b = hopf.components[1];
  const double lk = polygonal_linking(a, b);
  CHECK(polygonal_linking(b, a) == Approx(lk).margin(1e-9));
  CHECK(polygonal_linking(a.reversed(), b) == Approx(-lk).margin(1e-9));
  CHECK(polygonal_linking(a.reversed(), b.reversed()) == Approx(lk).margin(1e-9));
  CHECK(polygonal_linking(subdivide(a, 3), b) == Approx(lk).margin(1e-9));
}

TEST_CASE("writhe of planar and reflected curves") {
  const auto flat = catalog::circle_curve({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 2.0, 17);
  CHECK(polygonal_writhe(flat) == Approx(0.0).margin(1e-9));

  const auto tre = catalog::trefoil_curve(120);
  const double w = polygonal_writhe(tre);
  CHECK(polygonal_writhe(reflected_x(tre)) == Approx(-w).margin(1e-9));
}

TEST_CASE("trefoil writhe converges under refinement") {
  const double coarse = polygonal_writhe(catalog::trefoil_curve(200));
  const double dense = polygonal_writhe(catalog::trefoil_curve(2000));
  CHECK(std::abs(coarse - dense) < 1e-3);
  CHECK(std::lround(dense) == 3);
}

TEST_CASE("geometric validation errors") {
  PolyCurve two_points;
  two_points.vertices = {{0, 0, 0}, {1, 0, 0}};
  CHECK_THROWS_AS(polygonal_writhe(two_points), DegenerateSegments);

  PolyCurve repeated;
  repeated.vertices = {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(polygonal_writhe(repeated), DegenerateSegments);

  PolyCurve left, right;
  left.vertices = {{1, 0, 0}, {-1, 0.8, 0}, {-1, -0.8, 0}};
  right.vertices = {{1 + 5e-10, 0, 0}, {3, 0.8, 0}, {3, -0.8, 0}};
  CHECK_THROWS_AS(polygonal_linking(left, right), CurvesTooClose);
}

TEST_CASE("frame offsets") {
  const auto circle = catalog::circle_curve({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, 128);

  // Planar transport produces the zero framing.
  const auto flat = frame_offset(circle, 1e-2, 0);
  CHECK(polygonal_linking(circle, flat) == Approx(0.0).margin(1e-6));

  // One full rotation of the normal inserts one unit of framing.
  const auto once = frame_offset(circle, 1e-2, 1);
  CHECK(polygonal_linking(circle, once) == Approx(1.0).margin(1e-6));
  const auto minus = frame_offset(circle, 1e-2, -2);
  CHECK(polygonal_linking(circle, minus) == Approx(-2.0).margin(1e-6));

  CHECK_THROWS_AS(frame_offset(circle, 10.0, 0), EpsilonTooLarge);
  CHECK_THROWS_AS(frame_offset(circle, -1.0, 0), EpsilonTooLarge);
}

TEST_CASE("self-linking of the offset matches writhe plus twist") {
  const auto tre = catalog::trefoil_curve(200);
  const double w = polygonal_writhe(tre);
  for (const auto& [eps, tol] : {std::pair{1e-2, 0.1}, std::pair{1e-3, 0.02}}) {
    for (int twists : {0, 2}) {
      const auto off = frame_offset(tre, eps, twists);
      const double lk = polygonal_linking(tre, off);
      CHECK(std::abs(lk - std::round(w + twists)) <= tol);
    }
  }
}

TEST_CASE("vector potential on the axis of a circle") {
  const auto ring = catalog::circle_curve({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, 128);
  const FramedGeometricLink source{{ring}, {0}};
  // On the symmetry axis the field is purely axial.
  const Vec3 a = vector_potential(source, {0, 0, 0.8}, {1.0});
  CHECK(std::abs(a.x) < 1e-9);
  CHECK(std::abs(a.y) < 1e-9);
  CHECK(std::abs(a.z) > 1e-3);
  // A tiny loop that does not enclose the ring sees no net circulation.
  const auto tiny =
      catalog::circle_curve({0, 0, 0.8}, {1, 0, 0}, {0, 1, 0}, 0.05, 32);
  CHECK(std::abs(circulation(source, tiny)) < 1e-6);
}

TEST_CASE("vector potential scales as -4 pi / k") {
  const auto hopf = catalog::hopf_curves(64);
  const FramedGeometricLink source{{hopf.components[0]}, {0}};
  const Vec3 x{0.3, -0.7, 0.4};
  const Vec3 a4 = vector_potential(source, x, {4.0});
  const Vec3 am2 = vector_potential(source, x, {-2.0});
  CHECK(am2.x == Approx(-2.0 * a4.x).epsilon(1e-12));
  CHECK(am2.y == Approx(-2.0 * a4.y).epsilon(1e-12));
  CHECK(am2.z == Approx(-2.0 * a4.z).epsilon(1e-12));
  CHECK_THROWS_AS(vector_potential(source, hopf.components[0].vertices[3], {1.0}),
                  PointOnCurve);
}

TEST_CASE("circulation equals linking") {
  const auto hopf = catalog::hopf_curves(96);
  const FramedGeometricLink first{{hopf.components[0]}, {0}};
  CHECK(circulation(first, hopf.components[1]) == Approx(1.0).margin(1e-4));

  // A distant loop encloses nothing.
  const auto faraway = catalog::circle_curve({8, 8, 8}, {1, 0, 0}, {0, 0, 1}, 0.5, 48);
  CHECK(circulation(first, faraway) == Approx(0.0).margin(1e-4));

  const auto t24 = catalog::torus_2_4_curves(96);
  const FramedGeometricLink t0{{t24.components[0]}, {0}};
  CHECK(circulation(t0, t24.components[1]) == Approx(2.0).margin(1e-4));
}

TEST_CASE("geometric helicity decomposes into linkings and framings") {
  auto hopf = catalog::hopf_curves(128);
  hopf.framings = {0, 0};
  CHECK(helicity_geometric(hopf) == Approx(2.0).margin(1e-4));

  FramedGeometricLink lone{{catalog::circle_curve({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 1.0, 32)},
                           {5}};
  CHECK(helicity_geometric(lone) == Approx(5.0).margin(1e-12));

  const auto tre = catalog::trefoil_fixture(100, 3);
  CHECK(helicity_geometric(tre) == Approx(3.0).margin(1e-12));
}

TEST_CASE("geometric link JSON round trip") {
  const auto link = catalog::hopf_curves(16);
  const auto text = geometric_link_to_json(link).dump();
  const auto back = parse_geometric_link(text);
  REQUIRE(back.components.size() == 2);
  CHECK(back.framings == link.framings);
  for (size_t i = 0; i < 2; ++i) {
    REQUIRE(back.components[i].vertices.size() == link.components[i].vertices.size());
    for (size_t k = 0; k < back.components[i].vertices.size(); ++k)
      CHECK(norm(back.components[i].vertices[k] - link.components[i].vertices[k]) == 0.0);
  }
  CHECK_THROWS_AS(parse_geometric_link("[]"), MalformedInput);
  CHECK_THROWS_AS(parse_geometric_link(R"({"components":[{"vertices":[[0,0]]}]})"),
                  MalformedInput);
}

TEST_CASE("projections reproduce the braid diagrams") {
  CHECK(project_diagram(catalog::hopf_curves(200)).canonical_key() ==
        catalog::hopf(+1).canonical_key());
  CHECK(project_diagram(catalog::torus_2_4_curves(200)).canonical_key() ==
        catalog::torus_2_4().canonical_key());
  CHECK(project_diagram(catalog::whitehead_curves()).canonical_key() ==
        catalog::whitehead().canonical_key());
  CHECK(project_diagram(catalog::braid_closure_curves(3, {1, -2, 1, -2}))
            .canonical_key() == catalog::figure_eight().canonical_key());

  FramedGeometricLink tre;
  tre.components.push_back(catalog::trefoil_curve(200));
  tre.framings = {0};
  const auto proj = project_diagram(tre);
  CHECK(proj.crossing_count() == 3);
  CHECK(proj.writhe() == 3);
  CHECK(proj.canonical_key() == catalog::trefoil_right().canonical_key());
}

TEST_CASE("whitehead fixture has zero linking but nontrivial projection") {
  const auto wh = catalog::whitehead_curves();
  CHECK(polygonal_linking(wh.components[0], wh.components[1]) ==
        Approx(0.0).margin(1e-6));
  const auto proj = project_diagram(wh);
  CHECK(proj.crossing_count() == 5);
}
