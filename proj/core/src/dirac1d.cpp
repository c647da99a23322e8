#include <latloc/dirac1d.hpp>

#include <json.hpp>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace latloc {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi_v<double>;

// Quintic smoothstep: C^2 monotone ramp 0 -> 1 on [0, 1].
double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

double smoothstep_prime(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return 30.0 * x * x * (1.0 - x) * (1.0 - x);
}

// Integral of the smoothstep from 0 to x.
double smoothstep_integral(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return x - 0.5;
  return x * x * x * x * (2.5 + x * (-3.0 + x));
}

// Odd ramp used by the cylinder profile: equals x up to 1/4, then a C^2
// monotone transition reaching 1/2 at x = 3/4, constant after.
double ramp(double x) {
  if (x <= 0.25) return x;
  if (x >= 0.75) return 0.5;
  double u = (x - 0.25) * 2.0;
  return 0.25 + 0.5 * (u - smoothstep_integral(u));
}

double ramp_prime(double x) {
  if (x <= 0.25) return 1.0;
  if (x >= 0.75) return 0.0;
  return 1.0 - smoothstep((x - 0.25) * 2.0);
}

// Disc circumference profile: 2*pi*R near the center (standard metric),
// then a'(R) = 2*pi*(1 - smoothstep) until the circumference reaches 1,
// cylindrical (a = 1) after. The transition ends before the moment ramp
// begins at R = 1/4.
constexpr double kDiscFlat = 0.125;
const double kDiscDelta = 1.0 / kPi - 0.25;

double disc_a(double r) {
  if (r <= kDiscFlat) return 2.0 * kPi * r;
  double v = (r - kDiscFlat) / kDiscDelta;
  if (v >= 1.0) return 1.0;
  return kPi / 4.0 + 2.0 * kPi * kDiscDelta * (v - smoothstep_integral(v));
}

double disc_a_prime(double r) {
  if (r <= kDiscFlat) return 2.0 * kPi;
  double v = (r - kDiscFlat) / kDiscDelta;
  if (v >= 1.0) return 0.0;
  return 2.0 * kPi * (1.0 - smoothstep(v));
}

// Cutoff supported away from the localization set: 0 up to 1/8, 1 from 1/4.
double bump(double x) { return smoothstep((x - 0.125) * 8.0); }

double deformation_base(const Deformation& d, double r) {
  double f4 = (1.0 + r * r) * (1.0 + r * r);
  switch (d.family) {
    case DeformationFamily::constant_t:
      return d.t;
    case DeformationFamily::proper_function:
      return f4;
    case DeformationFamily::epsilon_family:
      return (1.0 - d.epsilon) * f4 + d.epsilon * d.t;
  }
  return d.t;
}

double deformation_factor(const ModelSpec1D& spec, double r) {
  double phi;
  if (spec.kind == ModelKind::cylinder)
    phi = (spec.tau == spec.rho) ? bump(std::abs(r)) : 1.0;
  else
    phi = bump(r);
  double p2 = phi * phi;
  return deformation_base(spec.deformation, r) * p2 * p2;
}

double weight_at(const ModelSpec1D& spec, double r) {
  return spec.kind == ModelKind::cylinder ? 1.0 : disc_a(r);
}

// Potential of the positive-chirality block A+ = d/dr + q.
double potential_plus(const ModelSpec1D& spec, double r) {
  ProfileMu mu{spec.kind, spec.rho};
  double diff = mu(r) - (double)spec.tau;
  double s = deformation_factor(spec, r);
  if (spec.kind == ModelKind::cylinder) return 2.0 * kPi * (1.0 + s) * diff;
  double a = disc_a(r);
  return 2.0 * kPi * diff * (1.0 / a + s * a);
}

// Potential of A- = -d/dr + q: the formal adjoint picks up the metric term.
double potential_minus(const ModelSpec1D& spec, double r) {
  double q = potential_plus(spec, r);
  if (spec.kind == ModelKind::disc) q -= disc_a_prime(r) / disc_a(r);
  return q;
}

struct BoundaryPlan {
  bool plus_drop_in = false;
  bool minus_drop_in = false;
  // The outer end is always Dirichlet on both sides.
};

BoundaryPlan boundary_plan(const ModelSpec1D& spec) {
  BoundaryPlan b;
  if (spec.kind == ModelKind::cylinder) {
    b.plus_drop_in = true;
    b.minus_drop_in = true;
    return b;
  }
  // Disc: the indicial exponents at the origin are R^k for the plus block
  // and R^-(k+1) for the minus block, k = tau - rho. The inner boundary
  // condition excludes exactly the non-normalizable branch.
  int k = spec.tau - spec.rho;
  b.plus_drop_in = (k <= -1);
  b.minus_drop_in = (k >= 0);
  return b;
}

void validate_spec(const ModelSpec1D& spec) {
  if (std::abs(spec.rho) > 1000000 || std::abs(spec.tau) > 1000000)
    throw domain_error("mode/weight magnitude exceeds the supported range");
  if (spec.grid.n < 64)
    throw domain_error("grid size n must be at least 64 (got " +
                       std::to_string(spec.grid.n) + ")");
  if (!(spec.grid.r_max >= 2.0))
    throw domain_error("domain half-width r_max must be at least 2");
  if (!(spec.deformation.t > 0.0))
    throw domain_error("deformation parameter t must be positive");
  if (spec.deformation.family == DeformationFamily::epsilon_family &&
      !(spec.deformation.epsilon >= 0.0 && spec.deformation.epsilon <= 1.0))
    throw domain_error("epsilon must lie in [0, 1]");
}

// Ascending eigenvalues of a symmetric tridiagonal matrix.
std::vector<double> tridiag_eigenvalues(std::vector<double> diag,
                                        std::vector<double> off) {
  lapack_int n = (lapack_int)diag.size();
  lapack_int info = LAPACKE_dsterf(n, diag.data(), off.data());
  if (info != 0)
    throw domain_error("eigenvalue iteration failed to converge (dsterf info " +
                       std::to_string((long long)info) + ")");
  return diag;
}

struct SideCount {
  int dim = 0;
  double gap = 0.0;
  double score = 0.0;
  std::vector<double> cluster;
};

// Count the kernel cluster of one normal operator from its eigenvalues:
// choose the split k maximizing sigma_k / max(sigma_{k-1}, floor); the side
// is resolved when that ratio reaches 100.
SideCount count_side(const std::vector<double>& eigs, double sigma_floor) {
  std::vector<double> sig;
  sig.reserve(eigs.size());
  for (double l : eigs) sig.push_back(std::sqrt(std::max(l, 0.0)));
  SideCount out;
  int kmax = std::min<int>(10, (int)sig.size() - 1);
  double best = -1.0;
  for (int k = 0; k <= kmax; ++k) {
    double top = (k == 0) ? 0.0 : sig[k - 1];
    double score = sig[k] / std::max(top, sigma_floor);
    if (score > best) {
      best = score;
      out.dim = k;
    }
  }
  out.score = best;
  out.gap = sig[out.dim];
  out.cluster.assign(sig.begin(), sig.begin() + out.dim);
  return out;
}

IndexResult solve_once(const OperatorMatrix& op) {
  auto ep = tridiag_eigenvalues(op.lplus_diag, op.lplus_off);
  auto em = tridiag_eigenvalues(op.lminus_diag, op.lminus_off);
  double sig_max = std::sqrt(std::max(
      {ep.empty() ? 0.0 : ep.back(), em.empty() ? 0.0 : em.back(), 0.0}));
  // Computed eigenvalues carry absolute noise ~ eps * sqrt(n) * lambda_max
  // from assembly and iteration, so singular values below
  // sig_max * sqrt(eps * sqrt(n)) are indistinguishable from zero. On fine
  // grids the true kernel eigenvalue (~h^4) sinks under that noise; the
  // floor keeps it classified as zero instead of as a spurious gap.
  double noise = std::sqrt(std::numeric_limits<double>::epsilon() *
                           std::sqrt((double)op.n));
  double floor = std::max(sig_max * noise, 1e-290);
  SideCount p = count_side(ep, floor);
  SideCount m = count_side(em, floor);
  IndexResult r;
  r.dim_ker_plus = p.dim;
  r.dim_ker_minus = m.dim;
  r.index = p.dim - m.dim;
  r.kernel_cluster = p.cluster;
  r.kernel_cluster.insert(r.kernel_cluster.end(), m.cluster.begin(),
                          m.cluster.end());
  std::sort(r.kernel_cluster.begin(), r.kernel_cluster.end());
  r.spectral_gap = std::min(p.gap, m.gap);
  r.separation_ratio = std::min(p.score, m.score);
  r.resolved = r.separation_ratio >= 100.0;
  r.refinement_consistent = false;
  return r;
}

}  // namespace

double disc_circumference(double r) { return disc_a(r); }
double disc_circumference_derivative(double r) { return disc_a_prime(r); }

double ProfileMu::operator()(double r) const {
  if (kind == ModelKind::cylinder)
    return (double)rho + (r >= 0.0 ? ramp(r) : -ramp(-r));
  if (r <= 0.25) return (double)rho;
  return (double)rho + 0.5 * smoothstep((r - 0.25) * 2.0);
}

double ProfileMu::derivative(double r) const {
  if (kind == ModelKind::cylinder) return ramp_prime(std::abs(r));
  if (r <= 0.25) return 0.0;
  return smoothstep_prime((r - 0.25) * 2.0);
}

OperatorMatrix build_cylinder_operator(const ModelSpec1D& spec) {
  if (spec.kind != ModelKind::cylinder)
    throw domain_error("build_cylinder_operator requires kind=cylinder");
  return build_operator(spec);
}

OperatorMatrix build_disc_operator(const ModelSpec1D& spec) {
  if (spec.kind != ModelKind::disc)
    throw domain_error("build_disc_operator requires kind=disc");
  return build_operator(spec);
}

OperatorMatrix build_operator(const ModelSpec1D& spec) {
  validate_spec(spec);
  OperatorMatrix op;
  op.spec = spec;
  op.n = spec.grid.n;
  const int n = op.n;
  if (spec.kind == ModelKind::cylinder) {
    op.r_lo = -spec.grid.r_max;
    op.r_hi = spec.grid.r_max;
  } else {
    op.r_lo = 1e-3 * spec.grid.r_max;
    op.r_hi = spec.grid.r_max;
  }
  const double h = (op.r_hi - op.r_lo) / (double)(n - 1);
  op.h = h;
  auto node = [&](int i) { return op.r_lo + h * (double)i; };
  auto mid = [&](int j) { return op.r_lo + h * ((double)j + 0.5); };

  BoundaryPlan bc = boundary_plan(spec);

  // Square bidiagonal presentation of A+: interior two-point stencils on the
  // midpoints plus the outer Dirichlet row. The inner condition, when
  // present, eliminates the first column in the normal-operator assembly.
  op.plus_diag.assign(n, 0.0);
  op.plus_super.assign(n - 1, 0.0);
  for (int j = 0; j < n - 1; ++j) {
    double q = potential_plus(spec, mid(j));
    op.plus_diag[j] = -1.0 / h + 0.5 * q;
    op.plus_super[j] = 1.0 / h + 0.5 * q;
  }
  op.plus_diag[n - 1] = 1.0 / h;

  // Weighted normal operator of A+ (variables on nodes).
  {
    int d_in = bc.plus_drop_in ? 1 : 0;
    int ncols = n - d_in - 1;  // outer node always eliminated
    op.lplus_diag.assign(ncols, 0.0);
    op.lplus_off.assign(ncols > 0 ? ncols - 1 : 0, 0.0);
    for (int j = 0; j < n - 1; ++j) {
      double rm = mid(j);
      double q = potential_plus(spec, rm);
      double wr = weight_at(spec, rm);
      double cl = (-1.0 / h + 0.5 * q) * std::sqrt(wr / weight_at(spec, node(j)));
      double cr =
          (1.0 / h + 0.5 * q) * std::sqrt(wr / weight_at(spec, node(j + 1)));
      int il = j - d_in;
      int ir = j + 1 - d_in;
      bool vl = il >= 0 && il < ncols;
      bool vr = ir >= 0 && ir < ncols;
      if (vl) op.lplus_diag[il] += cl * cl;
      if (vr) op.lplus_diag[ir] += cr * cr;
      if (vl && vr) op.lplus_off[il] += cl * cr;
    }
  }

  // Weighted normal operator of A- (variables on midpoints, equations on
  // interior nodes).
  {
    int d_in = bc.minus_drop_in ? 1 : 0;
    int ncols = (n - 1) - d_in - 1;  // outer midpoint always eliminated
    op.lminus_diag.assign(ncols, 0.0);
    op.lminus_off.assign(ncols > 0 ? ncols - 1 : 0, 0.0);
    for (int i = 1; i <= n - 2; ++i) {
      double rn = node(i);
      double q = potential_minus(spec, rn);
      double wr = weight_at(spec, rn);
      double cl =
          (1.0 / h + 0.5 * q) * std::sqrt(wr / weight_at(spec, mid(i - 1)));
      double cr = (-1.0 / h + 0.5 * q) * std::sqrt(wr / weight_at(spec, mid(i)));
      int il = (i - 1) - d_in;
      int ir = i - d_in;
      bool vl = il >= 0 && il < ncols;
      bool vr = ir >= 0 && ir < ncols;
      if (vl) op.lminus_diag[il] += cl * cl;
      if (vr) op.lminus_diag[ir] += cr * cr;
      if (vl && vr) op.lminus_off[il] += cl * cr;
    }
  }
  return op;
}

IndexResult compute_index(const OperatorMatrix& op) {
  IndexResult coarse = solve_once(op);
  ModelSpec1D refined = op.spec;
  refined.grid.n = op.spec.grid.n * 2;
  IndexResult fine = solve_once(build_operator(refined));
  if (!coarse.resolved && !fine.resolved)
    throw domain_error("index unresolved; refine grid or adjust deformation");
  IndexResult out = coarse.resolved ? coarse : fine;
  out.refinement_consistent = coarse.resolved && fine.resolved &&
                              coarse.dim_ker_plus == fine.dim_ker_plus &&
                              coarse.dim_ker_minus == fine.dim_ker_minus;
  return out;
}

IndexResult compute_index(const ModelSpec1D& spec) {
  return compute_index(build_operator(spec));
}

int analytic_zero_mode_count(const ProfileMu& profile, int tau, Chirality c) {
  // Zero modes solve a first-order ODE; normalizability is decided by the
  // asymptotic sign of the potential (exact half-integers at the ends) and,
  // on the disc, by the indicial exponent at the origin. All comparisons are
  // exact integer comparisons of doubled quantities.
  int twice_tau = 2 * tau;
  if (profile.kind == ModelKind::cylinder) {
    if (c == Chirality::plus)
      return (twice_tau > profile.twice_limit_neg() &&
              twice_tau < profile.twice_limit_pos())
                 ? 1
                 : 0;
    // The minus solution grows at whichever end the plus solution decays.
    return 0;
  }
  int k = tau - profile.rho;
  if (c == Chirality::plus)
    return (k >= 0 && twice_tau < profile.twice_limit_pos()) ? 1 : 0;
  return (k <= -1 && twice_tau > profile.twice_limit_pos()) ? 1 : 0;
}

SweepResult deformation_sweep(const ModelSpec1D& base, DeformationFamily family,
                              const std::vector<double>& values) {
  std::vector<Deformation> defs;
  if (family == DeformationFamily::proper_function) {
    Deformation d;
    d.family = family;
    d.t = base.deformation.t;
    defs.push_back(d);
  } else {
    for (double v : values) {
      Deformation d;
      d.family = family;
      if (family == DeformationFamily::constant_t) {
        d.t = v;
      } else {
        d.t = base.deformation.t;
        d.epsilon = v;
      }
      defs.push_back(d);
    }
  }
  SweepResult out;
  bool all_ok = !defs.empty();
  bool same = true;
  int first_index = 0;
  bool have_first = false;
  for (const auto& d : defs) {
    SweepEntry e;
    e.deformation = d;
    e.label = deformation_label(d);
    ModelSpec1D spec = base;
    spec.deformation = d;
    try {
      e.result = compute_index(spec);
      e.ok = true;
      if (!have_first) {
        first_index = e.result.index;
        have_first = true;
      } else if (e.result.index != first_index) {
        same = false;
      }
    } catch (const domain_error& err) {
      e.ok = false;
      e.error = err.what();
      all_ok = false;
    }
    out.entries.push_back(std::move(e));
  }
  out.all_equal = all_ok && same;
  return out;
}

AcyclicityProbe probe_acyclicity(const ModelSpec1D& spec, double lo, double hi) {
  validate_spec(spec);
  OperatorMatrix op = build_operator(spec);
  const int n = op.n;
  const double h = op.h;
  auto node = [&](int i) { return op.r_lo + h * (double)i; };
  auto mid = [&](int j) { return op.r_lo + h * ((double)j + 0.5); };
  double rlo = std::max(lo, op.r_lo);
  double rhi = std::min(hi, op.r_hi);
  if (!(rlo < rhi))
    throw domain_error("acyclicity probe region is empty");
  ProfileMu mu{spec.kind, spec.rho};

  AcyclicityProbe out;
  double kappa = std::numeric_limits<double>::infinity();
  int region_nodes = 0;
  for (int i = 0; i < n; ++i) {
    double r = node(i);
    if (r < rlo || r > rhi) continue;
    ++region_nodes;
    double d = (double)spec.tau - mu(r);
    kappa = std::min(kappa, d * d);
  }
  if (region_nodes < 8)
    throw domain_error("acyclicity probe region is empty");
  out.kappa_estimate = kappa;

  // Rayleigh-quotient estimate of |<{D, D_K} u, u>| / <D_K^* D_K u, u> over
  // deterministic pseudo-random sections compactly supported in the region.
  // D is the undeformed block, D_K the multiplication block.
  auto q0_at = [&](double r) {
    double diff = mu(r) - (double)spec.tau;
    return spec.kind == ModelKind::cylinder ? 2.0 * kPi * diff
                                            : 2.0 * kPi * diff / disc_a(r);
  };
  auto b_at = [&](double r) {
    double diff = mu(r) - (double)spec.tau;
    return spec.kind == ModelKind::cylinder ? 2.0 * kPi * diff
                                            : 2.0 * kPi * diff * disc_a(r);
  };
  double margin = 0.1 * (rhi - rlo);
  auto envelope = [&](double r) {
    return smoothstep((r - rlo) / margin) * smoothstep((rhi - r) / margin);
  };
  std::mt19937 rng(12345u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0.0;
  for (int probe = 0; probe < 64; ++probe) {
    std::vector<double> u(n, 0.0);
    for (int i = 0; i < n; ++i) {
      double r = node(i);
      if (r < rlo || r > rhi) continue;
      u[i] = gauss(rng) * envelope(r);
    }
    double cross = 0.0, denom = 0.0;
    for (int j = 0; j < n - 1; ++j) {
      double rm = mid(j);
      double wr = weight_at(spec, rm);
      double sl = std::sqrt(wr / weight_at(spec, node(j)));
      double sr = std::sqrt(wr / weight_at(spec, node(j + 1)));
      double q0 = q0_at(rm);
      double au = (-1.0 / h + 0.5 * q0) * sl * u[j] +
                  (1.0 / h + 0.5 * q0) * sr * u[j + 1];
      double b = b_at(rm);
      double bu = 0.5 * b * (sl * u[j] + sr * u[j + 1]);
      cross += au * bu;
      denom += bu * bu;
    }
    if (denom < 1e-280) continue;
    best = std::max(best, std::abs(2.0 * cross) / denom);
  }
  out.c_rho_estimate = best;
  return out;
}

int product_index(std::vector<ModelSpec1D> factors,
                  const std::vector<int>& multimode) {
  if (factors.size() != multimode.size())
    throw domain_error("product_index requires one multimode entry per factor");
  int prod = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    factors[i].tau = multimode[i];
    prod *= compute_index(factors[i]).index;
  }
  return prod;
}

std::string deformation_label(const Deformation& d) {
  char buf[96];
  switch (d.family) {
    case DeformationFamily::constant_t:
      std::snprintf(buf, sizeof buf, "constant_t(t=%g)", d.t);
      return buf;
    case DeformationFamily::proper_function:
      return "proper_function";
    case DeformationFamily::epsilon_family:
      std::snprintf(buf, sizeof buf, "epsilon_family(eps=%g,t=%g)", d.epsilon,
                    d.t);
      return buf;
  }
  return "?";
}

namespace {

DeformationFamily family_from_string(const std::string& s) {
  if (s == "constant_t") return DeformationFamily::constant_t;
  if (s == "proper_function") return DeformationFamily::proper_function;
  if (s == "epsilon_family") return DeformationFamily::epsilon_family;
  throw parse_error("unknown deformation family '" + s +
                    "' (expected constant_t, proper_function, or "
                    "epsilon_family)");
}

std::string family_to_string(DeformationFamily f) {
  switch (f) {
    case DeformationFamily::constant_t:
      return "constant_t";
    case DeformationFamily::proper_function:
      return "proper_function";
    case DeformationFamily::epsilon_family:
      return "epsilon_family";
  }
  return "?";
}

}  // namespace

ModelSpec1D model_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("model document must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "kind" && key != "rho" && key != "tau" && key != "deformation" &&
        key != "grid")
      throw parse_error("unknown key '" + key + "' in model document");
  }
  ModelSpec1D spec;
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw parse_error("model document requires a string 'kind'");
  std::string kind = doc["kind"].get<std::string>();
  if (kind == "cylinder")
    spec.kind = ModelKind::cylinder;
  else if (kind == "disc")
    spec.kind = ModelKind::disc;
  else
    throw parse_error("unknown model kind '" + kind +
                      "' (expected cylinder or disc)");
  if (!doc.contains("rho") || !doc["rho"].is_number_integer())
    throw parse_error("model document requires an integer 'rho'");
  if (!doc.contains("tau") || !doc["tau"].is_number_integer())
    throw parse_error("model document requires an integer 'tau'");
  spec.rho = doc["rho"].get<int>();
  spec.tau = doc["tau"].get<int>();
  if (doc.contains("deformation")) {
    const Json& dj = doc["deformation"];
    if (!dj.is_object()) throw parse_error("'deformation' must be an object");
    for (const auto& [key, value] : dj.items()) {
      (void)value;
      if (key != "family" && key != "t" && key != "epsilon")
        throw parse_error("unknown key '" + key + "' in deformation");
    }
    if (!dj.contains("family") || !dj["family"].is_string())
      throw parse_error("deformation requires a string 'family'");
    spec.deformation.family = family_from_string(dj["family"].get<std::string>());
    if (dj.contains("t")) spec.deformation.t = dj["t"].get<double>();
    if (dj.contains("epsilon"))
      spec.deformation.epsilon = dj["epsilon"].get<double>();
  }
  if (doc.contains("grid")) {
    const Json& gj = doc["grid"];
    if (!gj.is_object()) throw parse_error("'grid' must be an object");
    for (const auto& [key, value] : gj.items()) {
      (void)value;
      if (key != "r_max" && key != "n")
        throw parse_error("unknown key '" + key + "' in grid");
    }
    if (gj.contains("r_max")) spec.grid.r_max = gj["r_max"].get<double>();
    if (gj.contains("n")) spec.grid.n = gj["n"].get<int>();
  }
  return spec;
}

std::string model_to_json(const ModelSpec1D& spec) {
  Json doc;
  doc["kind"] = spec.kind == ModelKind::cylinder ? "cylinder" : "disc";
  doc["rho"] = spec.rho;
  doc["tau"] = spec.tau;
  doc["deformation"]["family"] = family_to_string(spec.deformation.family);
  doc["deformation"]["t"] = spec.deformation.t;
  if (spec.deformation.family == DeformationFamily::epsilon_family)
    doc["deformation"]["epsilon"] = spec.deformation.epsilon;
  doc["grid"]["r_max"] = spec.grid.r_max;
  doc["grid"]["n"] = spec.grid.n;
  return doc.dump(2) + "\n";
}

std::string index_result_to_json(const IndexResult& r) {
  Json doc;
  doc["index"] = r.index;
  doc["dim_ker_plus"] = r.dim_ker_plus;
  doc["dim_ker_minus"] = r.dim_ker_minus;
  doc["spectral_gap"] = r.spectral_gap;
  doc["separation_ratio"] = r.separation_ratio;
  doc["resolved"] = r.resolved;
  doc["refinement_consistent"] = r.refinement_consistent;
  doc["kernel_cluster"] = r.kernel_cluster;
  return doc.dump(2) + "\n";
}

}  // namespace latloc
