#pragma once

// Rational convex polyhedra in halfspace form, exact arithmetic throughout:
// membership, vertex enumeration, boundedness, Delzant verification, lattice
// point enumeration, and hyperplane slices in adapted lattice coordinates.

#include <latloc/exact.hpp>
#include <latloc/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace latloc {

// One halfspace  <normal, x> >= offset  with primitive integer normal.
struct Halfspace {
  std::vector<Int> normal;
  Rat offset;
};

// H-polyhedron. `empty_certificate` is set when emptiness was detected
// during construction (e.g. a slice whose induced constant constraint is
// violated); such a polyhedron is explicitly empty rather than an error.
struct Polyhedron {
  int dim = 0;
  std::vector<Halfspace> facets;
  std::string name;
  bool known_empty = false;
  std::string empty_certificate;
};

struct Vertex {
  std::vector<Rat> point;
  std::vector<int> active_facets;  // indices of all facets tight at the point
};

struct DelzantViolation {
  std::vector<Rat> vertex;
  std::string reason;  // "3 active facets (need 2)" or "normals det = -2"
};

struct DelzantReport {
  bool is_delzant = false;
  std::vector<DelzantViolation> violations;
};

// Integer bounding box, inclusive on both ends.
struct Box {
  std::vector<Int> lo;
  std::vector<Int> hi;
};

// Construct with primitive-normalized facets (offsets rescaled accordingly).
// Throws parse_error on a zero normal or dimension mismatch.
Polyhedron make_polyhedron(int dim, std::vector<Halfspace> facets,
                           std::string name = "");

// "(1, 3/2)" style rendering of a rational point.
std::string point_to_string(const std::vector<Rat>& x);

// Exact membership; explicit-empty polyhedra contain nothing.
bool contains(const Polyhedron& p, const std::vector<Rat>& x);
bool contains(const Polyhedron& p, const Weight& w);

// Exact feasibility by Fourier-Motzkin elimination. If infeasible and
// `certificate` is non-null, a human-readable contradiction is stored.
bool is_feasible(const Polyhedron& p, std::string* certificate = nullptr);

// All vertices (basic feasible points), deduplicated, each carrying the full
// set of facets active at it, sorted lexicographically by coordinates.
// Empty polyhedra yield {}. Throws domain_error when the polyhedron is
// feasible but not pointed (normals do not span), naming the rank.
std::vector<Vertex> vertices(const Polyhedron& p);

// True iff the recession cone {v : <n_i, v> >= 0 for all facets} is {0},
// or the polyhedron is empty.
bool is_bounded(const Polyhedron& p);

// Delzant verification at every vertex: exactly dim active facets whose
// primitive normals form a determinant +-1 matrix. Propagates the
// non-pointed error from vertices().
DelzantReport delzant_check(const Polyhedron& p);

// All lattice points, lexicographic order. Bounded polyhedra scan the vertex
// bounding box; unbounded ones require an explicit box, else domain_error
// ("unbounded polyhedron requires a bounding box").
std::vector<Weight> lattice_points(const Polyhedron& p,
                                   const std::optional<Box>& box = std::nullopt);

// The slice { y in Z^{dim-1} coordinates : <xi, x> = level, x in P } in the
// adapted coordinates x = level*u1 + sum_j y_j b_j, where [u1 | b_2 .. b_n]
// is transpose(W) for the unimodular W with W*xi = e1. The parameterization
// is a lattice bijection between slice lattice points and fiber points of P.
// Requires dim >= 2 and primitive xi. Induced constant constraints that fail
// produce an explicitly empty result with certificate (no exception).
Polyhedron slice(const Polyhedron& p, const Weight& xi, const Int& level);

// JSON document I/O. Schema:
//   {"dim": n, "name": optional string,
//    "facets": [{"normal": [ints], "offset": int or "p/q"}, ...]}
// Unknown keys are rejected; errors name the offending facet index.
Polyhedron polytope_from_json(const std::string& text);
std::string polytope_to_json(const Polyhedron& p);
Polyhedron load_polytope(const std::string& path);

}  // namespace latloc
