#include <latloc/quantize.hpp>

#include <json.hpp>

#include <sstream>

namespace latloc {

namespace {

using Json = nlohmann::ordered_json;

IMat normal_matrix(const Polyhedron& p) {
  IMat m;
  m.reserve(p.facets.size());
  for (const auto& f : p.facets) m.push_back(f.normal);
  return m;
}

}  // namespace

FormalCharacter quantize(const Polyhedron& p, bool allow_non_delzant) {
  // Delzant is a per-vertex condition, so a non-pointed polyhedron (no
  // vertices) passes vacuously; delzant_check itself refuses those inputs.
  bool pointed = !p.known_empty && rank(normal_matrix(p)) == p.dim;
  if (!allow_non_delzant && pointed) {
    DelzantReport rep = delzant_check(p);
    if (!rep.is_delzant) {
      std::ostringstream msg;
      msg << "polytope is not Delzant:";
      for (const auto& v : rep.violations)
        msg << " vertex " << point_to_string(v.vertex) << ": " << v.reason
            << ";";
      throw domain_error(msg.str());
    }
  }
  return indicator(p);
}

std::int64_t riemann_roch(const Polyhedron& p) {
  if (!is_bounded(p))
    throw domain_error("riemann_roch requires a bounded polytope");
  return (std::int64_t)lattice_points(p).size();
}

Polyhedron reduce(const Polyhedron& p, const Weight& xi, const Int& level) {
  for (const auto& v : vertices(p)) {
    Rat s = 0;
    for (int i = 0; i < p.dim; ++i) s += Rat(xi[i]) * v.point[i];
    if (s == Rat(level))
      throw domain_error("level " + level.str() + " along " +
                         weight_to_string(xi) +
                         " is irregular: attained at vertex " +
                         point_to_string(v.point));
  }
  return slice(p, xi, level);
}

QRReport verify_qr(const Polyhedron& p, const Weight& xi, const Int& level) {
  QRReport rep;
  rep.xi = xi;
  rep.level = level;
  rep.regular = true;
  for (const auto& v : vertices(p)) {
    Rat s = 0;
    for (int i = 0; i < p.dim; ++i) s += Rat(xi[i]) * v.point[i];
    if (s == Rat(level)) rep.regular = false;
  }
  rep.lhs = evaluate(restrict_character(quantize(p), xi), Weight{level});
  rep.rhs = riemann_roch(slice(p, xi, level));
  rep.pass = rep.regular && rep.lhs == rep.rhs;
  return rep;
}

LocalizationReport localization_report(const Polyhedron& p, const Weight& rho) {
  LocalizationReport rep;
  rep.rho = rho;
  rep.total = evaluate(quantize(p), rho);
  rep.fiber_contribution = contains(p, rho) ? 1 : 0;
  for (int f = 0; f < (int)p.facets.size(); ++f)
    rep.boundary_terms.push_back(BoundaryTerm{f, 0, "fixed-point-vanishing"});
  return rep;
}

std::string qr_report_to_json(const QRReport& r) {
  Json doc;
  doc["xi"] = Json::array();
  for (const Int& v : r.xi) doc["xi"].push_back(v.convert_to<std::int64_t>());
  doc["level"] = r.level.convert_to<std::int64_t>();
  doc["regular"] = r.regular;
  doc["lhs"] = r.lhs;
  doc["rhs"] = r.rhs;
  doc["pass"] = r.pass;
  return doc.dump(2) + "\n";
}

std::string localization_report_to_json(const LocalizationReport& r) {
  Json doc;
  doc["rho"] = Json::array();
  for (const Int& v : r.rho) doc["rho"].push_back(v.convert_to<std::int64_t>());
  doc["total"] = r.total;
  doc["fiber_contribution"] = r.fiber_contribution;
  doc["boundary_terms"] = Json::array();
  for (const auto& b : r.boundary_terms) {
    Json bj;
    bj["facet"] = b.facet;
    bj["contribution"] = b.contribution;
    bj["justification"] = b.justification;
    doc["boundary_terms"].push_back(std::move(bj));
  }
  return doc.dump(2) + "\n";
}

}  // namespace latloc
