// latloc command-line front end: quantize momentum polytopes, reduce and
// check [Q,R]=0 at integral levels, and run the 1D model-operator index
// computations. Exit codes: 0 success, 1 domain error (irregular level,
// unresolved index, failed check), 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <latloc/character.hpp>
#include <latloc/dirac1d.hpp>
#include <latloc/exact.hpp>
#include <latloc/polytope.hpp>
#include <latloc/quantize.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

std::string trim_copy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return s.substr(b, e - b);
}

long long parse_ll_strict(const std::string& raw, const std::string& what) {
  std::string t = trim_copy(raw);
  auto bad = [&]() {
    return latloc::parse_error("invalid " + what + " '" + raw +
                               "' (expected an integer)");
  };
  if (t.empty()) throw bad();
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) throw bad();
  for (std::size_t j = i; j < t.size(); ++j)
    if (t[j] < '0' || t[j] > '9') throw bad();
  try {
    std::size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw bad();
    return v;
  } catch (const latloc::parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::vector<long long> parse_int_list(const std::string& text,
                                      const std::string& what) {
  std::vector<long long> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(parse_ll_strict(cur, what));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_ll_strict(cur, what));
  return out;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> out;
  std::string cur;
  auto flush = [&]() {
    std::string t = trim_copy(cur);
    try {
      std::size_t pos = 0;
      double v = std::stod(t, &pos);
      if (t.empty() || pos != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw latloc::parse_error("invalid " + what + " '" + text +
                                "' (expected comma-separated numbers)");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

latloc::Weight to_weight(const std::vector<long long>& xs) {
  latloc::Weight w;
  w.reserve(xs.size());
  for (long long x : xs) w.push_back(latloc::Int(x));
  return w;
}

Json weight_to_json(const latloc::Weight& w) {
  Json arr = Json::array();
  for (const auto& x : w) arr.push_back(x.convert_to<long long>());
  return arr;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int resolve_grid_n(bool flag_given, int flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("LATLOC_GRID_N")) {
    long long v = parse_ll_strict(env, "LATLOC_GRID_N");
    if (v < 1 || v > 100000000)
      throw latloc::parse_error(
          "invalid LATLOC_GRID_N '" + std::string(env) +
          "' (expected a positive integer)");
    return (int)v;
  }
  return 2001;
}

latloc::DeformationFamily family_from_flag(const std::string& s) {
  if (s == "constant_t") return latloc::DeformationFamily::constant_t;
  if (s == "proper_function") return latloc::DeformationFamily::proper_function;
  return latloc::DeformationFamily::epsilon_family;
}

struct QuantizeArgs {
  std::string polytope;
  std::string eval;
  std::string box;
  bool allow_non_delzant = false;
  std::string format = "text";
};

int run_quantize(const QuantizeArgs& a) {
  latloc::Polyhedron p = latloc::load_polytope(a.polytope);
  latloc::FormalCharacter ch = latloc::quantize(p, a.allow_non_delzant);
  if (!a.eval.empty()) {
    auto xs = parse_int_list(a.eval, "--eval entry");
    if ((int)xs.size() != p.dim)
      throw latloc::parse_error("--eval expects " + std::to_string(p.dim) +
                                " comma-separated integers for this polytope");
    latloc::Weight w = to_weight(xs);
    std::int64_t v = latloc::evaluate(ch, w);
    if (a.format == "json") {
      Json doc;
      doc["weight"] = weight_to_json(w);
      doc["value"] = v;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << v << "\n";
    }
    return 0;
  }
  std::vector<std::pair<latloc::Weight, std::int64_t>> sup;
  if (!a.box.empty()) {
    auto xs = parse_int_list(a.box, "--box entry");
    if ((int)xs.size() != 2 * p.dim)
      throw latloc::parse_error(
          "--box expects " + std::to_string(2 * p.dim) +
          " comma-separated integers (lows then highs)");
    latloc::Box box;
    for (int i = 0; i < p.dim; ++i) box.lo.push_back(latloc::Int(xs[i]));
    for (int i = 0; i < p.dim; ++i)
      box.hi.push_back(latloc::Int(xs[p.dim + i]));
    for (const auto& w : latloc::lattice_points(p, box)) sup.push_back({w, 1});
  } else {
    sup = latloc::support(ch);
  }
  std::int64_t total = 0;
  for (const auto& [w, m] : sup) total += m;
  if (a.format == "json") {
    Json doc;
    doc["support"] = Json::array();
    for (const auto& [w, m] : sup) {
      Json entry;
      entry["weight"] = weight_to_json(w);
      entry["multiplicity"] = m;
      doc["support"].push_back(entry);
    }
    doc["total"] = total;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& [w, m] : sup)
      std::cout << latloc::weight_to_string(w) << " " << m << "\n";
    std::cout << "total " << total << "\n";
  }
  return 0;
}

struct ReduceArgs {
  std::string polytope;
  std::string xi;
  long long level = 0;
  std::string format = "text";
};

latloc::Weight parse_xi(const std::string& text, int dim) {
  auto xs = parse_int_list(text, "--xi entry");
  if ((int)xs.size() != dim)
    throw latloc::parse_error("--xi expects " + std::to_string(dim) +
                              " comma-separated integers for this polytope");
  return to_weight(xs);
}

int run_reduce(const ReduceArgs& a) {
  latloc::Polyhedron p = latloc::load_polytope(a.polytope);
  latloc::Weight xi = parse_xi(a.xi, p.dim);
  latloc::Polyhedron q = latloc::reduce(p, xi, latloc::Int(a.level));
  if (a.format == "json") {
    std::cout << latloc::polytope_to_json(q);
  } else {
    std::cout << "name " << (q.name.empty() ? "(unnamed)" : q.name) << "\n";
    std::cout << "dim " << q.dim << "\n";
    for (const auto& f : q.facets)
      std::cout << latloc::weight_to_string(f.normal)
                << " . x >= " << latloc::rational_to_string(f.offset) << "\n";
    if (q.known_empty) std::cout << "empty: " << q.empty_certificate << "\n";
  }
  return 0;
}

struct VerifyQRArgs {
  std::string polytope;
  std::string xi;
  long long level = 0;
  std::string format = "text";
};

int run_verify_qr(const VerifyQRArgs& a) {
  latloc::Polyhedron p = latloc::load_polytope(a.polytope);
  latloc::Weight xi = parse_xi(a.xi, p.dim);
  latloc::QRReport r = latloc::verify_qr(p, xi, latloc::Int(a.level));
  if (a.format == "json") {
    std::cout << latloc::qr_report_to_json(r);
  } else {
    std::cout << "xi " << latloc::weight_to_string(r.xi) << "\n";
    std::cout << "level " << r.level << "\n";
    std::cout << "regular " << (r.regular ? "yes" : "no") << "\n";
    std::cout << "lhs " << r.lhs << "\n";
    std::cout << "rhs " << r.rhs << "\n";
    std::cout << "pass " << (r.pass ? "yes" : "no") << "\n";
  }
  return r.pass ? 0 : 1;
}

struct ModelIndexArgs {
  std::string kind = "cylinder";
  int rho = 0;
  int tau = 0;
  std::string family = "constant_t";
  double t = 100.0;
  double epsilon = 0.0;
  double r_max = 5.0;
  int grid_n = 0;
  bool grid_given = false;
  std::string format = "text";
};

latloc::ModelSpec1D spec_from_args(const ModelIndexArgs& a) {
  latloc::ModelSpec1D spec;
  spec.kind = a.kind == "cylinder" ? latloc::ModelKind::cylinder
                                   : latloc::ModelKind::disc;
  spec.rho = a.rho;
  spec.tau = a.tau;
  spec.deformation.family = family_from_flag(a.family);
  spec.deformation.t = a.t;
  spec.deformation.epsilon = a.epsilon;
  spec.grid.r_max = a.r_max;
  spec.grid.n = resolve_grid_n(a.grid_given, a.grid_n);
  return spec;
}

int run_model_index(const ModelIndexArgs& a) {
  latloc::ModelSpec1D spec = spec_from_args(a);
  latloc::IndexResult r = latloc::compute_index(spec);
  if (a.format == "json") {
    Json doc;
    doc["index"] = r.index;
    doc["dim_ker_plus"] = r.dim_ker_plus;
    doc["dim_ker_minus"] = r.dim_ker_minus;
    doc["spectral_gap"] = r.spectral_gap;
    doc["separation_ratio"] = r.separation_ratio;
    doc["resolved"] = r.resolved;
    doc["refinement_consistent"] = r.refinement_consistent;
    doc["kernel_cluster"] = r.kernel_cluster;
    doc["grid_n"] = spec.grid.n;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << r.index << "\n";
  }
  return 0;
}

struct SweepArgs {
  ModelIndexArgs base;
  std::string taus;
  std::string values;
};

int run_sweep(const SweepArgs& a) {
  latloc::ModelSpec1D base = spec_from_args(a.base);
  latloc::DeformationFamily family = family_from_flag(a.base.family);
  std::vector<double> values;
  if (!a.values.empty())
    values = parse_double_list(a.values, "--values entry");
  if (values.empty() &&
      family != latloc::DeformationFamily::proper_function)
    throw latloc::parse_error(
        "--values is required for constant_t and epsilon_family sweeps");
  std::vector<long long> taus;
  if (!a.taus.empty())
    taus = parse_int_list(a.taus, "--taus entry");
  else
    taus = {a.base.tau};

  struct Row {
    long long tau;
    latloc::SweepEntry entry;
  };
  std::vector<Row> rows;
  bool all_equal = true;
  bool any_fail = false;
  for (long long tau : taus) {
    latloc::ModelSpec1D spec = base;
    spec.tau = (int)tau;
    latloc::SweepResult sr = latloc::deformation_sweep(spec, family, values);
    all_equal = all_equal && sr.all_equal;
    for (auto& e : sr.entries) {
      if (!e.ok) any_fail = true;
      rows.push_back({tau, std::move(e)});
    }
  }

  if (a.base.format == "json") {
    Json doc;
    doc["rows"] = Json::array();
    for (const auto& row : rows) {
      Json r;
      r["rho"] = a.base.rho;
      r["tau"] = row.tau;
      r["deformation"] = row.entry.label;
      r["ok"] = row.entry.ok;
      if (row.entry.ok) {
        r["index"] = row.entry.result.index;
        r["gap"] = row.entry.result.spectral_gap;
        r["resolved"] = row.entry.result.resolved;
      } else {
        r["error"] = row.entry.error;
      }
      doc["rows"].push_back(r);
    }
    doc["all_equal"] = all_equal;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "rho,tau,deformation,index,gap,resolved\n";
    for (const auto& row : rows) {
      std::cout << a.base.rho << "," << row.tau << "," << row.entry.label
                << ",";
      if (row.entry.ok)
        std::cout << row.entry.result.index << ","
                  << fmt17(row.entry.result.spectral_gap) << ","
                  << (row.entry.result.resolved ? 1 : 0);
      else
        std::cout << ",,0";
      std::cout << "\n";
    }
  }
  return any_fail ? 1 : 0;
}

struct LocalizeArgs {
  std::string polytope;
  std::string rho;
  std::string format = "text";
};

int run_localize(const LocalizeArgs& a) {
  latloc::Polyhedron p = latloc::load_polytope(a.polytope);
  auto xs = parse_int_list(a.rho, "--rho entry");
  if ((int)xs.size() != p.dim)
    throw latloc::parse_error("--rho expects " + std::to_string(p.dim) +
                              " comma-separated integers for this polytope");
  latloc::LocalizationReport rep =
      latloc::localization_report(p, to_weight(xs));
  if (a.format == "json") {
    std::cout << latloc::localization_report_to_json(rep);
  } else {
    std::cout << "rho " << latloc::weight_to_string(rep.rho) << "\n";
    std::cout << "total " << rep.total << "\n";
    std::cout << "fiber " << rep.fiber_contribution << "\n";
    for (const auto& b : rep.boundary_terms)
      std::cout << "facet " << b.facet << " " << b.contribution << " "
                << b.justification << "\n";
  }
  return 0;
}

void add_format_flag(CLI::App* sub, std::string& target,
                     std::vector<std::string> allowed) {
  sub->add_option("--format", target, "output format")
      ->check(CLI::IsMember(allowed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lattice-point quantization of momentum polytopes and model-operator "
      "index computations"};
  app.require_subcommand(1);

  QuantizeArgs qa;
  auto* q = app.add_subcommand(
      "quantize", "quantize a polytope; print its character or one value");
  q->add_option("--polytope", qa.polytope, "polytope JSON file")->required();
  q->add_option("--eval", qa.eval, "weight to evaluate (comma-separated)");
  q->add_option("--box", qa.box,
                "support listing box: lows then highs, comma-separated");
  q->add_flag("--allow-non-delzant", qa.allow_non_delzant,
              "skip the Delzant gate");
  add_format_flag(q, qa.format, {"text", "json"});

  ReduceArgs ra;
  auto* rd = app.add_subcommand(
      "reduce", "symplectic reduction: slice at a regular integral level");
  rd->add_option("--polytope", ra.polytope, "polytope JSON file")->required();
  rd->add_option("--xi", ra.xi, "primitive direction (comma-separated)")
      ->required();
  rd->add_option("--level", ra.level, "integral level")->required();
  add_format_flag(rd, ra.format, {"text", "json"});

  VerifyQRArgs va;
  auto* vq = app.add_subcommand(
      "verify-qr", "check quantization-commutes-with-reduction at one level");
  vq->add_option("--polytope", va.polytope, "polytope JSON file")->required();
  vq->add_option("--xi", va.xi, "primitive direction (comma-separated)")
      ->required();
  vq->add_option("--level", va.level, "integral level")->required();
  add_format_flag(vq, va.format, {"text", "json"});

  ModelIndexArgs ma;
  auto* mi = app.add_subcommand(
      "model-index", "graded index of a 1D model operator at one mode");
  mi->add_option("--kind", ma.kind, "model kind")
      ->check(CLI::IsMember({"cylinder", "disc"}));
  mi->add_option("--rho", ma.rho, "bundle weight")->required();
  mi->add_option("--tau", ma.tau, "Fourier mode")->required();
  mi->add_option("--family", ma.family, "deformation family")
      ->check(CLI::IsMember(
          {"constant_t", "proper_function", "epsilon_family"}));
  mi->add_option("--t", ma.t, "deformation strength t");
  mi->add_option("--epsilon", ma.epsilon, "epsilon (epsilon_family only)");
  mi->add_option("--r-max", ma.r_max, "domain half-width / outer radius");
  auto* mg = mi->add_option("--grid-n", ma.grid_n, "grid nodes");
  add_format_flag(mi, ma.format, {"text", "json"});

  SweepArgs sa;
  auto* sw = app.add_subcommand(
      "sweep", "sweep a deformation family over modes; CSV by default");
  sw->add_option("--kind", sa.base.kind, "model kind")
      ->check(CLI::IsMember({"cylinder", "disc"}));
  sw->add_option("--rho", sa.base.rho, "bundle weight")->required();
  sw->add_option("--tau", sa.base.tau, "single Fourier mode");
  sw->add_option("--taus", sa.taus, "Fourier modes (comma-separated)");
  sw->add_option("--family", sa.base.family, "deformation family")
      ->check(CLI::IsMember(
          {"constant_t", "proper_function", "epsilon_family"}));
  sw->add_option("--values", sa.values,
                 "sweep values: t's for constant_t, epsilons for "
                 "epsilon_family");
  sw->add_option("--t", sa.base.t, "base deformation strength t");
  sw->add_option("--r-max", sa.base.r_max, "domain half-width / outer radius");
  auto* sg = sw->add_option("--grid-n", sa.base.grid_n, "grid nodes");
  sa.base.format = "csv";
  add_format_flag(sw, sa.base.format, {"csv", "json", "text"});

  LocalizeArgs la;
  auto* lz = app.add_subcommand(
      "localize", "localization ledger for one weight of a polytope");
  lz->add_option("--polytope", la.polytope, "polytope JSON file")->required();
  lz->add_option("--rho", la.rho, "weight (comma-separated)")->required();
  add_format_flag(lz, la.format, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(q)) return run_quantize(qa);
    if (app.got_subcommand(rd)) return run_reduce(ra);
    if (app.got_subcommand(vq)) return run_verify_qr(va);
    if (app.got_subcommand(mi)) {
      ma.grid_given = mg->count() > 0;
      return run_model_index(ma);
    }
    if (app.got_subcommand(sw)) {
      sa.base.grid_given = sg->count() > 0;
      return run_sweep(sa);
    }
    if (app.got_subcommand(lz)) return run_localize(la);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const latloc::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const latloc::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
