#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "artin/curvature_audit.hpp"
#include "support/diagram_gen.hpp"

using namespace artin;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ARTIN_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Check* find_check(const std::vector<Check>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("single hexagon") {
  auto d = load_diagram(fixture("hexstar.diagram"));
  auto c = curvatures(d);
  CHECK(c.total == kFullTurn);
  CHECK(c.polygonal.polygons.size() == 1);
  CHECK(c.polygon_kappa[0] == 0);
  // boundary type-1: 12 - 6 - 2*3, boundary type-2: 12 - 6 - 2*1
  CHECK(c.vertex_kappa[d.boundary[0]] == 0);
  CHECK(c.vertex_kappa[d.boundary[1]] == 4);
  CHECK(c.mark[d.boundary[1]] == MarkClass::corner);
  CHECK_THROWS_AS(redistribute(d), Error);
}

TEST_CASE("diagram validation rejects broken inputs") {
  auto j = nlohmann::json::parse(fixture("hexstar.diagram"));
  SECTION("missing triangle") {
    j["triangles"].erase(0);
    CHECK_THROWS_AS(load_diagram(j.dump()), Error);
  }
  SECTION("two discs sharing a vertex") {
    auto k = j;
    k["types"]["o2"] = 0;
    for (const char* v : {"r1", "r2", "r3"}) k["types"][v] = 1;
    for (const char* v : {"s1", "s2"}) k["types"][v] = 2;
    // second hexagon around o2 meeting the first only at q1
    const std::vector<std::string> ring{"q1", "r1", "s1", "r2", "s2", "r3"};
    for (std::size_t i = 0; i < ring.size(); ++i) k["triangles"].push_back({"o2", ring[i], ring[(i + 1) % 6]});
    CHECK_THROWS_AS(load_diagram(k.dump()), Error);
  }
  SECTION("type-0 vertex on the boundary") {
    j["boundary"].push_back("o");
    CHECK_THROWS_AS(load_diagram(j.dump()), Error);
  }
  SECTION("not JSON") {
    try {
      load_diagram("{");
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
    }
  }
}

TEST_CASE("generated diagrams are valid and round-trip") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    auto d = testsupport::random_diagram(rng, 15);
    REQUIRE_NOTHROW(validate_disc(d));
    auto again = load_diagram(dump_diagram(d));
    CHECK(curvatures(again).total == kFullTurn);
  }
}

TEST_CASE("two hexagons glued along an edge") {
  testsupport::DiagramBuilder b(3);
  REQUIRE(b.glue(0, 1, 3));
  // corners: type-2 boundary vertices in exactly one polygon
  std::vector<std::size_t> corners;
  for (auto v : b.boundary())
    if (b.type(v) == 2 && b.polygons_at(v) == 1) corners.push_back(v);
  REQUIRE_FALSE(corners.empty());
  auto d = b.build(corners, std::nullopt);
  auto r = redistribute(d);
  CHECK(r.base.total == kFullTurn);
  CHECK(r.total_prime == kFullTurn);
  CHECK(r.inconsistent);
  CHECK_FALSE(r.failed_lemmas().empty());
  CHECK(r.cells.size() == 2);
  for (const auto& cell : r.cells) {
    CHECK(cell.special.size() <= 2);
    CHECK(cell.outer_path.front() == cell.inner_path.back());
    CHECK(cell.outer_path.back() == cell.inner_path.front());
  }
}

TEST_CASE("a transition vertex in three polygons violates the dichotomy") {
  testsupport::DiagramBuilder b(3);
  auto v = b.boundary()[0];
  REQUIRE(b.fan(0, 3, 3, false));
  REQUIRE(b.polygons_at(v) == 3);
  auto c = curvatures(b.build({v}, std::nullopt));
  const auto* chk = find_check(c.checks, "transition_dichotomy");
  REQUIRE(chk);
  CHECK_FALSE(chk->pass);
}

TEST_CASE("a closed fan makes an interior type-2 vertex") {
  testsupport::DiagramBuilder b(3);
  auto v = b.boundary()[0];
  REQUIRE(b.fan(0, 12, 3, true));
  auto d = b.build({}, std::nullopt);
  CHECK_FALSE(d.on_boundary(v));
  auto c = curvatures(d);
  CHECK(c.polygonal.polygon_count[v] == 12);
  // two corners of angle pi/6 per polygon and no boundary term
  CHECK(c.vertex_kappa[v] == kFullTurn - 2 * 12);
  CHECK(find_check(c.checks, "interior_type2_min_polygons")->pass);
  CHECK(c.total == kFullTurn);
}

TEST_CASE("audit lines") {
  auto d = load_diagram(fixture("hexstar.diagram"));
  auto lines = audit_lines(d, curvatures(d), std::nullopt);
  CHECK(lines.front() == "vertices: 7");
  CHECK(std::find(lines.begin(), lines.end(), "total: 12") != lines.end());
}
