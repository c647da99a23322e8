#pragma once

// Formal characters of a rank-r torus: integer-coefficient functions on the
// weight lattice Z^r with three eager support kinds (finite support,
// lattice-point indicator of a polyhedron, finite sums of those) plus a lazy
// line-pushforward kind so restrictions of unbounded indicators with bounded
// fibers stay representable.

#include <latloc/exact.hpp>
#include <latloc/polytope.hpp>

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace latloc {

struct FormalCharacter {
  // Term kinds. A character is a list of (coefficient, term) pairs; a pure
  // finite-support character is kept merged as a single FiniteTerm.
  struct FiniteTerm {
    std::map<Weight, std::int64_t> coeffs;  // no zero values stored
  };
  struct IndicatorTerm {
    Polyhedron p;  // multiplicity one on every lattice point of p
  };
  // Pushforward of an indicator along primitive xi: rank-1 character whose
  // value at m is the (finite) number of lattice points on the fiber
  // <xi, x> = m. Fibers must be bounded; evaluation throws otherwise.
  struct PushforwardTerm {
    Polyhedron base;
    Weight xi;
  };
  using Term = std::variant<FiniteTerm, IndicatorTerm, PushforwardTerm>;

  int rank = 0;
  std::vector<std::pair<std::int64_t, Term>> terms;

  bool is_finite_support() const;
};

// delta(w): the character of the one-dimensional representation of weight w.
FormalCharacter delta(const Weight& w);

// Indicator character of the lattice points of p (rank = p.dim).
FormalCharacter indicator(const Polyhedron& p);

// Zero character of the given rank.
FormalCharacter zero_character(int rank);

// Exact evaluation of the multiplicity at weight w (size must match rank).
std::int64_t evaluate(const FormalCharacter& a, const Weight& w);

// Pointwise sum / integer scaling. Ranks must agree.
FormalCharacter add(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter scale(std::int64_t c, const FormalCharacter& a);

enum class TensorMode { same_torus, outer };

// same_torus: convolution on a common torus (at least one factor must have
// finite support; otherwise domain_error). outer: external product, ranks
// add, delta(v) (x) delta(w) = delta(v ++ w).
FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b,
                       TensorMode mode);

// Restriction along the homomorphism t -> t^xi (xi primitive): the value at
// level m is the sum of multiplicities over the fiber <xi, w> = m. Fibers
// must have finite total mass; evaluation of a noncompact fiber throws
// domain_error ("fiber ... is unbounded; quantization requires compact
// fibers").
FormalCharacter restrict_character(const FormalCharacter& a, const Weight& xi);

// Total mass of a finite-support character; domain_error otherwise.
std::int64_t total_multiplicity(const FormalCharacter& a);

// Support of a finite-support character, lexicographic; domain_error if the
// character is not finitely supported (after forcing indicator terms of
// bounded polyhedra eager).
std::vector<std::pair<Weight, std::int64_t>> support(const FormalCharacter& a);

// Semi-decidable equality: collapses both sides to finite support when
// possible and compares; lazy terms are compared by probing evaluations over
// a window. Intended for tests and diagnostics.
bool probably_equal(const FormalCharacter& a, const FormalCharacter& b);

// JSON round-trip for characters.
std::string character_to_json(const FormalCharacter& a);
FormalCharacter character_from_json(const std::string& text);

}  // namespace latloc
