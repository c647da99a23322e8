#pragma once

// Quantization of momentum polytopes and its interaction with symplectic
// reduction: Q(P) = indicator of the lattice points of P, Riemann-Roch
// counts, reduction at regular levels, commutation reports, and the
// localization ledger (interior fiber term plus vanishing facet terms).

#include <latloc/character.hpp>
#include <latloc/exact.hpp>
#include <latloc/polytope.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace latloc {

// Quantize a momentum polytope: the formal character with multiplicity one
// on every lattice point of p. By default p must pass delzant_check;
// allow_non_delzant skips that gate. Non-pointed polyhedra have no vertices
// and are accepted vacuously.
FormalCharacter quantize(const Polyhedron& p, bool allow_non_delzant = false);

// Total quantization dimension: the number of lattice points. Requires a
// bounded polyhedron (domain_error otherwise).
std::int64_t riemann_roch(const Polyhedron& p);

// Symplectic reduction at an integral level along primitive xi: the slice
// polytope in adapted coordinates. The level must be regular: no vertex of p
// may lie on the hyperplane <xi, x> = level (domain_error naming the
// attaining vertex otherwise).
Polyhedron reduce(const Polyhedron& p, const Weight& xi, const Int& level);

struct QRReport {
  Weight xi;
  Int level;
  bool regular = false;
  std::int64_t lhs = 0;  // multiplicity of `level` in restrict(quantize(p), xi)
  std::int64_t rhs = 0;  // riemann_roch of the slice at `level`
  bool pass = false;     // regular && lhs == rhs
};

// Quantization-commutes-with-reduction check at a single level. Irregular
// levels are flagged (regular = false, pass = false) rather than thrown;
// both sides are still computed from the slice, which is insensitive to
// regularity.
QRReport verify_qr(const Polyhedron& p, const Weight& xi, const Int& level);

struct BoundaryTerm {
  int facet = 0;                 // facet index in p
  std::int64_t contribution = 0; // identically zero
  std::string justification;    // "fixed-point-vanishing"
};

struct LocalizationReport {
  Weight rho;
  std::int64_t total = 0;             // Q(p) evaluated at rho
  std::int64_t fiber_contribution = 0; // 1 if rho in P else 0
  std::vector<BoundaryTerm> boundary_terms;
};

// Localization ledger for the character value at weight rho: the interior
// fiber contributes contains(p, rho), and every facet contributes a zero
// boundary term; total = fiber + sum of boundary terms always holds.
LocalizationReport localization_report(const Polyhedron& p, const Weight& rho);

std::string qr_report_to_json(const QRReport& r);
std::string localization_report_to_json(const LocalizationReport& r);

}  // namespace latloc
