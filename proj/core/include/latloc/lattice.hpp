#pragma once

// Lattice-side linear algebra: gcd/Bezout column operations, Hermite normal
// form, completion of a primitive vector to a basis, exact determinants.

#include <latloc/exact.hpp>

namespace latloc {

// gcd of the entries' absolute values; gcd of the empty/all-zero vector is 0.
Int content(const Weight& w);

// True iff w is nonzero and gcd(|w_i|) == 1.
bool is_primitive(const Weight& w);

// Divide by the content (no-op on the zero vector). Returns the content.
Int make_primitive(Weight& w);

// Extended gcd: returns g = gcd(a, b) >= 0 and writes u, v with u*a + v*b = g.
Int xgcd(const Int& a, const Int& b, Int& u, Int& v);

// Exact determinant of a square integer matrix (fraction-free Bareiss).
Int det(const IMat& a);

// n x n identity.
IMat identity(int n);

// Matrix product (exact).
IMat mat_mul(const IMat& a, const IMat& b);

// Matrix-vector product (exact).
Weight mat_vec(const IMat& a, const Weight& x);

IMat transpose(const IMat& a);

// Exact inverse of a unimodular integer matrix (det = +-1).
// Throws domain_error if |det| != 1.
IMat unimodular_inverse(const IMat& a);

// Rank of an integer matrix over the rationals.
int rank(const IMat& a);

struct HermiteResult {
  IMat h;  // A * U = H, lower-triangular profile, nonnegative pivots
  IMat u;  // unimodular column-operation accumulator
};

// Column-style Hermite normal form via deterministic extended-gcd column
// operations, pivots made nonnegative. Requires full row rank; otherwise
// throws domain_error reporting the computed rank.
HermiteResult hermite_normal_form(const IMat& a);

// Given primitive xi in Z^n, return unimodular U whose first column is xi.
// Throws domain_error when xi is not primitive (reports the content).
IMat complete_to_basis(const Weight& xi);

// Unimodular W with W * xi = e_1 (the inverse of complete_to_basis(xi)).
IMat unimodular_reducing(const Weight& xi);

}  // namespace latloc
