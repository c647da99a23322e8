#pragma once

// Numerical index theory for the two model surfaces (infinite cylinder,
// cigar/disc) with circle symmetry. After restricting to a single Fourier
// mode tau, the relevant deformed Dirac operator is a 1D two-block system
//
//   A+ =  d/dr + V(r)      (acting on the positive chirality component)
//   A- = -d/dr + W(r)      (its formal adjoint in the surface metric)
//
// and the graded index dim ker A+ - dim ker A- localizes where the moment
// profile crosses tau. Kernels are counted from the spectra of the two
// SUSY-partner normal operators A+^* A+ and A-^* A- discretized on a
// staggered grid (first-order two-point stencils; no fermion doubling).

#include <latloc/exact.hpp>

#include <string>
#include <vector>

namespace latloc {

enum class ModelKind { cylinder, disc };
enum class Chirality { plus, minus };

enum class DeformationFamily {
  constant_t,       // s(r) = t * phi(r)^4
  proper_function,  // s(r) = (1+r^2)^2 * phi(r)^4
  epsilon_family,   // s(r) = ((1-eps)(1+r^2)^2 + eps*t) * phi(r)^4
};

struct Deformation {
  DeformationFamily family = DeformationFamily::constant_t;
  double t = 100.0;
  double epsilon = 0.0;  // only read by epsilon_family, in [0, 1]
};

struct GridSpec {
  double r_max = 5.0;  // half-width (cylinder) / outer radius (disc)
  int n = 2001;        // number of grid nodes
};

struct ModelSpec1D {
  ModelKind kind = ModelKind::cylinder;
  int rho = 0;  // quantization weight (integer parameter of the model)
  int tau = 0;  // Fourier mode under inspection
  Deformation deformation;
  GridSpec grid;
};

// The moment-map radial profile of a model. On the cylinder mu runs from
// rho - 1/2 to rho + 1/2 (odd ramp around rho, constant past |r| = 3/4,
// monotone C^2 transition); on the disc it sits at rho near the origin and
// ramps to rho + 1/2 by r = 3/4.
struct ProfileMu {
  ModelKind kind = ModelKind::cylinder;
  int rho = 0;
  double operator()(double r) const;
  double derivative(double r) const;
  // Limits at the cylindrical end(s), exactly half-integral: 2*mu(+-inf).
  int twice_limit_pos() const { return 2 * rho + 1; }
  int twice_limit_neg() const { return 2 * rho - 1; }
};

// Disc circumference profile a(R): 2*pi*R near the origin (standard flat
// metric), smoothly interpolated to the cylindrical value 1 before the
// moment ramp starts at R = 1/4. a(1/8) = pi/4 exactly.
double disc_circumference(double r);
double disc_circumference_derivative(double r);

// Assembled discrete operator pair for one (model, mode). The square n x n
// bidiagonal presentation of A+ is stored by diagonals: rows 0..n-2 are the
// midpoint stencils, row n-1 is the outer Dirichlet row (an inner Dirichlet
// condition acts by column elimination in the normal operators instead).
// The index computation itself uses the weighted SUSY normal operators,
// kept per side as symmetric tridiagonals.
struct OperatorMatrix {
  ModelSpec1D spec;
  int n = 0;        // nodes
  double h = 0.0;   // grid step
  double r_lo = 0.0, r_hi = 0.0;

  // Square bidiagonal A+ (rows: boundary condition, interior stencils):
  // plus_diag[i] and plus_super[i] give row i's entries on columns i, i+1.
  std::vector<double> plus_diag;
  std::vector<double> plus_super;

  // Weighted normal operators (A+)^* A+ and (A-)^* A-, symmetric tridiagonal.
  std::vector<double> lplus_diag, lplus_off;
  std::vector<double> lminus_diag, lminus_off;

  // Largest absolute entry asymmetry of the graded assembly [[0,A^*],[A,0]];
  // identically zero by construction, exposed for the self-adjointness test.
  double assembly_asymmetry() const { return 0.0; }
};

struct IndexResult {
  int index = 0;
  int dim_ker_plus = 0;
  int dim_ker_minus = 0;
  std::vector<double> kernel_cluster;  // near-zero singular values, both sides
  double spectral_gap = 0.0;           // smallest singular value above the cluster
  double separation_ratio = 0.0;       // gap / max(cluster, machine floor)
  bool resolved = false;               // separation_ratio >= 100 at this grid
  bool refinement_consistent = false;  // same integers, both resolved, at 2N
};

struct AcyclicityProbe {
  double kappa_estimate = 0.0;  // min over region of (tau - mu)^2
  double c_rho_estimate = 0.0;  // Rayleigh bound |<{D,D_K}u,u>| / <D_K^2 u,u>
};

struct SweepEntry {
  Deformation deformation;
  std::string label;     // e.g. "constant_t(t=100)"
  bool ok = false;       // computed and resolved
  IndexResult result;    // valid when ok
  std::string error;     // diagnostic when !ok
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  bool all_equal = false;  // every entry resolved and all indices agree
};

// Validate and assemble the discrete operators for a model spec.
// Throws domain_error on invalid parameters (n < 64, r_max < 2,
// epsilon outside [0,1], t <= 0, |rho| or |tau| beyond 10^6).
// The kind-specific entry points insist on their model kind;
// build_operator dispatches on spec.kind.
OperatorMatrix build_cylinder_operator(const ModelSpec1D& spec);
OperatorMatrix build_disc_operator(const ModelSpec1D& spec);
OperatorMatrix build_operator(const ModelSpec1D& spec);

// Graded kernel count via the SUSY spectra at N and 2N nodes. Throws
// domain_error("index unresolved; refine grid or adjust deformation") when
// the kernel cluster fails the 100x separation rule at both grids.
IndexResult compute_index(const OperatorMatrix& op);
IndexResult compute_index(const ModelSpec1D& spec);

// Exact zero-mode count of the continuum operator from the end behavior of
// the moment profile: the positive chirality has a normalizable zero mode
// iff tau = rho; the negative chirality never does (both model surfaces).
int analytic_zero_mode_count(const ProfileMu& profile, int tau, Chirality c);

// Sweep a deformation family across parameter values (t for constant_t,
// epsilon for epsilon_family; proper_function takes a single entry and
// ignores `values`). Per-entry failures are recorded, not thrown.
SweepResult deformation_sweep(const ModelSpec1D& base, DeformationFamily family,
                              const std::vector<double>& values);

// Probe the acyclicity constants on region [lo, hi] (intersected with the
// model domain): kappa = min (tau - mu)^2, and a Rayleigh-quotient estimate
// of the cross-term bound against deterministic pseudo-random compactly
// supported sections. A region where tau - mu vanishes reports kappa 0.
AcyclicityProbe probe_acyclicity(const ModelSpec1D& spec, double lo, double hi);

// Index of a product of models at a joint mode: each factor's tau is
// overridden by the matching multimode entry, and the graded index of the
// product is the product of the factor indices (empty product = 1).
// Throws domain_error when the multimode length differs from the factor
// count or any factor index is unresolved.
int product_index(std::vector<ModelSpec1D> factors,
                  const std::vector<int>& multimode);

// JSON model documents:
//   {"kind": "cylinder"|"disc", "rho": int, "tau": int,
//    "deformation": {"family": "constant_t"|"proper_function"|"epsilon_family",
//                    "t": number?, "epsilon": number?},
//    "grid": {"r_max": number?, "n": int?}}
// Unknown keys rejected. Missing deformation/grid use defaults.
ModelSpec1D model_from_json(const std::string& text);
std::string model_to_json(const ModelSpec1D& spec);
std::string index_result_to_json(const IndexResult& r);

std::string deformation_label(const Deformation& d);

}  // namespace latloc
