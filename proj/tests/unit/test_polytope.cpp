#include <doctest.h>

#include <latloc/polytope.hpp>

#include <algorithm>
#include <set>
#include <string>

using namespace latloc;

namespace {

Halfspace hs(std::initializer_list<long long> normal, long long num,
             long long den = 1) {
  Halfspace h;
  for (long long v : normal) h.normal.push_back(Int(v));
  h.offset = Rat(num, den);
  return h;
}

Weight wt(std::initializer_list<long long> xs) {
  Weight w;
  for (long long v : xs) w.push_back(Int(v));
  return w;
}

// [0,k]^2
Polyhedron square(long long k) {
  return make_polyhedron(2,
                         {hs({1, 0}, 0), hs({-1, 0}, -k), hs({0, 1}, 0),
                          hs({0, -1}, -k)},
                         "square");
}

// k * standard simplex: x >= 0, y >= 0, x + y <= k
Polyhedron simplex2(long long k) {
  return make_polyhedron(
      2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -k)}, "simplex");
}

Polyhedron quadrant() {
  return make_polyhedron(2, {hs({1, 0}, 0), hs({0, 1}, 0)}, "quadrant");
}

Polyhedron segment(long long a, long long b) {
  return make_polyhedron(1, {hs({1}, a), hs({-1}, -b)}, "segment");
}

}  // namespace

TEST_CASE("make_polyhedron normalizes facets and validates input") {
  Polyhedron p = make_polyhedron(2, {hs({2, 4}, 6)});
  CHECK(p.facets.size() == 1);
  CHECK(p.facets[0].normal == std::vector<Int>{Int(1), Int(2)});
  CHECK(p.facets[0].offset == Rat(3));
  CHECK_THROWS_AS((void)make_polyhedron(2, {hs({0, 0}, 1)}), parse_error);
  CHECK_THROWS_AS((void)make_polyhedron(2, {hs({1}, 0)}), parse_error);
  CHECK_THROWS_AS((void)make_polyhedron(0, {}), parse_error);
  // duplicate facets collapse
  Polyhedron q = make_polyhedron(2, {hs({1, 0}, 0), hs({2, 0}, 0)});
  CHECK(q.facets.size() == 1);
}

TEST_CASE("membership is exact") {
  Polyhedron p = square(2);
  CHECK(contains(p, wt({0, 0})));
  CHECK(contains(p, wt({2, 2})));
  CHECK_FALSE(contains(p, wt({3, 0})));
  CHECK(contains(p, std::vector<Rat>{Rat(1, 2), Rat(3, 2)}));
  CHECK_FALSE(contains(p, std::vector<Rat>{Rat(-1, 7), Rat(0)}));
}

TEST_CASE("feasibility via variable elimination") {
  CHECK(is_feasible(square(1)));
  std::string cert;
  Polyhedron empty =
      make_polyhedron(1, {hs({1}, 1), hs({-1}, 0)}, "empty-segment");
  CHECK_FALSE(is_feasible(empty, &cert));
  CHECK(cert.find("contradiction") != std::string::npos);
}

TEST_CASE("feasibility carries constant-coefficient rows intact") {
  // y1 in [0,2], y1+y2 in [0,2], y2 in [-3,-1] is feasible (e.g. (2,-1)).
  // The y2 bounds have zero y1-coefficient, so they are carried through the
  // first elimination stage; a carried row combined later must contribute
  // its true constant, not the dropped coefficient slot.
  Polyhedron p = make_polyhedron(2,
                                 {hs({1, 0}, 0), hs({-1, 0}, -2),
                                  hs({1, 1}, 0), hs({-1, -1}, -2),
                                  hs({0, 1}, -3), hs({0, -1}, 1)},
                                 "carried-rows");
  CHECK(is_feasible(p));
  auto pts = lattice_points(p);
  REQUIRE(pts.size() == 3);  // (1,-1), (2,-2), (2,-1)
  CHECK(std::find(pts.begin(), pts.end(), wt({2, -1})) != pts.end());
}

TEST_CASE("vertex enumeration of the square") {
  auto vs = vertices(square(2));
  REQUIRE(vs.size() == 4);
  // lexicographic order of points
  CHECK(vs[0].point == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(vs[1].point == std::vector<Rat>{Rat(0), Rat(2)});
  CHECK(vs[2].point == std::vector<Rat>{Rat(2), Rat(0)});
  CHECK(vs[3].point == std::vector<Rat>{Rat(2), Rat(2)});
  for (const auto& v : vs) CHECK(v.active_facets.size() == 2);
}

TEST_CASE("vertex enumeration corner cases") {
  // Non-pointed feasible polyhedron: a slab has no vertices -> error.
  Polyhedron slab =
      make_polyhedron(2, {hs({1, 0}, 0), hs({-1, 0}, -3)}, "slab");
  CHECK_THROWS_WITH_AS((void)vertices(slab), doctest::Contains("pointed"),
                       domain_error);
  // Infeasible: no vertices, no error.
  Polyhedron empty = make_polyhedron(1, {hs({1}, 1), hs({-1}, 0)});
  CHECK(vertices(empty).empty());
  // Simplex with a rational vertex.
  Polyhedron tri = make_polyhedron(
      2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-2, -1}, -1)}, "halfwidth");
  auto vs = vertices(tri);
  REQUIRE(vs.size() == 3);
  CHECK(vs[1].point == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(vs[2].point == std::vector<Rat>{Rat(1, 2), Rat(0)});
}

TEST_CASE("boundedness") {
  CHECK(is_bounded(square(1)));
  CHECK(is_bounded(simplex2(3)));
  CHECK_FALSE(is_bounded(quadrant()));
  CHECK_FALSE(is_bounded(make_polyhedron(2, {hs({1, 0}, 0), hs({-1, 0}, -3)})));
  CHECK(is_bounded(segment(0, 5)));
  CHECK_FALSE(is_bounded(make_polyhedron(1, {hs({1}, 0)})));
  // known-empty is bounded by convention
  Polyhedron empty = make_polyhedron(1, {hs({1}, 1), hs({-1}, 0)});
  CHECK(is_bounded(empty));
}

TEST_CASE("delzant_check accepts smooth corners and reports violations") {
  CHECK(delzant_check(square(3)).is_delzant);
  CHECK(delzant_check(simplex2(2)).is_delzant);
  // x >= 0, y >= 0, x + 2y <= 2: vertex (0,1) has normals (1,0), (-1,-2).
  Polyhedron bad = make_polyhedron(
      2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -2}, -2)}, "bad-corner");
  DelzantReport rep = delzant_check(bad);
  CHECK_FALSE(rep.is_delzant);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].vertex == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(rep.violations[0].reason.find("determinant") != std::string::npos);
}

TEST_CASE("lattice point counts on frozen examples") {
  CHECK(lattice_points(square(1)).size() == 4);
  CHECK(lattice_points(square(2)).size() == 9);
  CHECK(lattice_points(simplex2(2)).size() == 6);
  CHECK(lattice_points(segment(0, 3)).size() == 4);
  auto pts = lattice_points(square(2));
  CHECK(std::is_sorted(pts.begin(), pts.end()));  // lexicographic
  CHECK(pts.front() == wt({0, 0}));
  CHECK(pts.back() == wt({2, 2}));
}

TEST_CASE("unbounded enumeration requires a box") {
  CHECK_THROWS_WITH_AS((void)lattice_points(quadrant()),
                       doctest::Contains("bounding box"), domain_error);
  Box b;
  b.lo = {Int(0), Int(0)};
  b.hi = {Int(3), Int(3)};
  CHECK(lattice_points(quadrant(), b).size() == 16);
  // the box clips, membership still applies
  b.lo = {Int(-2), Int(-2)};
  CHECK(lattice_points(quadrant(), b).size() == 16);
}

TEST_CASE("slice of the square along e1") {
  Polyhedron s = slice(square(2), wt({1, 0}), Int(1));
  CHECK(s.dim == 1);
  CHECK_FALSE(s.known_empty);
  CHECK(lattice_points(s).size() == 3);  // fiber x=1 has y in {0,1,2}
}

TEST_CASE("slice of the simplex along the diagonal") {
  // x+y = 1 inside 2*simplex: points (0,1), (1,0) -> 2 lattice points.
  Polyhedron s = slice(simplex2(2), wt({1, 1}), Int(1));
  CHECK(lattice_points(s).size() == 2);
}

TEST_CASE("slice of the quadrant is bounded with the right count") {
  // x+y = 2, x,y >= 0: three lattice points.
  Polyhedron s = slice(quadrant(), wt({1, 1}), Int(2));
  CHECK(is_bounded(s));
  CHECK(lattice_points(s).size() == 3);
}

TEST_CASE("slice detects emptiness via a violated constant constraint") {
  // x = 5 misses [0,2]^2: the transformed x-bounds become constants.
  Polyhedron s = slice(square(2), wt({1, 0}), Int(5));
  CHECK(s.known_empty);
  CHECK(s.empty_certificate.find("constant") != std::string::npos);
  CHECK(lattice_points(s).empty());
}

TEST_CASE("slice detects emptiness via elimination") {
  // x+y = 7 misses [0,2]^2 but no single constraint becomes constant.
  Polyhedron s = slice(square(2), wt({1, 1}), Int(7));
  CHECK(s.known_empty);
  CHECK(lattice_points(s).empty());
}

TEST_CASE("slice validates input") {
  CHECK_THROWS_AS((void)slice(segment(0, 3), wt({1}), Int(1)), domain_error);
  CHECK_THROWS_AS((void)slice(square(2), wt({2, 2}), Int(1)), domain_error);
}

TEST_CASE("slice of a cube along a mixed-sign direction") {
  // x-y+z = 3 inside [0,2]^3: (1,0,2), (2,0,1), (2,1,2).
  Polyhedron cube = make_polyhedron(3,
                                    {hs({1, 0, 0}, 0), hs({-1, 0, 0}, -2),
                                     hs({0, 1, 0}, 0), hs({0, -1, 0}, -2),
                                     hs({0, 0, 1}, 0), hs({0, 0, -1}, -2)},
                                    "cube");
  Polyhedron s = slice(cube, wt({1, -1, 1}), Int(3));
  CHECK_FALSE(s.known_empty);
  CHECK(lattice_points(s).size() == 3);
  // Level 4 is attained only at the vertex (2,0,2).
  Polyhedron top = slice(cube, wt({1, -1, 1}), Int(4));
  CHECK_FALSE(top.known_empty);
  CHECK(lattice_points(top).size() == 1);
}

TEST_CASE("polytope JSON round trip") {
  Polyhedron p = make_polyhedron(
      2, {hs({1, 0}, 0), hs({-2, -4}, -3)}, "sample");
  std::string text = polytope_to_json(p);
  Polyhedron q = polytope_from_json(text);
  CHECK(q.dim == p.dim);
  CHECK(q.name == p.name);
  REQUIRE(q.facets.size() == p.facets.size());
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    CHECK(q.facets[i].normal == p.facets[i].normal);
    CHECK(q.facets[i].offset == p.facets[i].offset);
  }
  // byte-determinism of the emitter
  CHECK(polytope_to_json(q) == text);
}

TEST_CASE("polytope JSON rejects malformed documents") {
  CHECK_THROWS_AS((void)polytope_from_json("not json"), parse_error);
  CHECK_THROWS_AS((void)polytope_from_json(R"({"dim": 2})"), parse_error);
  CHECK_THROWS_WITH_AS(
      (void)polytope_from_json(
          R"({"dim": 2, "facets": [], "surprise": 1})"),
      doctest::Contains("surprise"), parse_error);
  CHECK_THROWS_WITH_AS(
      (void)polytope_from_json(
          R"({"dim": 2, "facets": [{"normal": [1], "offset": 0}]})"),
      doctest::Contains("facet 0"), parse_error);
  CHECK_THROWS_AS(
      (void)polytope_from_json(
          R"({"dim": 2, "facets": [{"normal": [1, 0], "offset": "x"}]})"),
      parse_error);
  // rational offsets accepted as "p/q"
  Polyhedron p = polytope_from_json(
      R"({"dim": 1, "facets": [{"normal": [2], "offset": "1/2"}]})");
  CHECK(p.facets[0].normal == std::vector<Int>{Int(1)});
  CHECK(p.facets[0].offset == Rat(1, 4));
}

TEST_CASE("point_to_string renders rational points") {
  CHECK(point_to_string({Rat(1), Rat(3, 2)}) == "(1, 3/2)");
}
