#include <latloc/polytope.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace latloc {

namespace {

using Json = nlohmann::ordered_json;

}  // namespace

std::string point_to_string(const std::vector<Rat>& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    out << rational_to_string(x[i]);
  }
  out << ")";
  return out.str();
}

namespace {

IMat normal_matrix(const Polyhedron& p) {
  IMat m;
  m.reserve(p.facets.size());
  for (const auto& f : p.facets) m.push_back(f.normal);
  return m;
}

// Solve the square rational system rows * x = rhs; nullopt when singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
  int n = (int)a.size();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// One constraint sum(row[i] * x_i) >= row[d] over the first `vars` variables,
// scaled to integers and content-normalized so duplicates collapse.
std::vector<Int> normalize_row(const std::vector<Rat>& row) {
  Int denlcm = 1;
  for (const Rat& q : row)
    denlcm = boost::multiprecision::lcm(denlcm, rat_den(q));
  std::vector<Int> out;
  out.reserve(row.size());
  for (const Rat& q : row) out.push_back(rat_num(q) * (denlcm / rat_den(q)));
  Int g = 0;
  for (const Int& v : out) g = boost::multiprecision::gcd(g, v);
  if (g > 1)
    for (Int& v : out) v /= g;
  return out;
}

}  // namespace

Polyhedron make_polyhedron(int dim, std::vector<Halfspace> facets,
                           std::string name) {
  if (dim < 1 || dim > 8)
    throw parse_error("polyhedron dimension " + std::to_string(dim) +
                      " outside supported range [1, 8]");
  Polyhedron p;
  p.dim = dim;
  p.name = std::move(name);
  std::set<std::pair<std::vector<Int>, Rat>> seen;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    Halfspace f = facets[i];
    if ((int)f.normal.size() != dim)
      throw parse_error("facet " + std::to_string(i) + ": normal has " +
                        std::to_string(f.normal.size()) + " entries, expected " +
                        std::to_string(dim));
    Int g = content(f.normal);
    if (g == 0)
      throw parse_error("facet " + std::to_string(i) + ": zero normal vector");
    if (g > 1) {
      for (Int& v : f.normal) v /= g;
      f.offset /= Rat(g);
    }
    if (seen.emplace(f.normal, f.offset).second) p.facets.push_back(std::move(f));
  }
  return p;
}

bool contains(const Polyhedron& p, const std::vector<Rat>& x) {
  if (p.known_empty) return false;
  if ((int)x.size() != p.dim)
    throw domain_error("contains: point has " + std::to_string(x.size()) +
                       " coordinates, polyhedron has dimension " +
                       std::to_string(p.dim));
  for (const auto& f : p.facets) {
    Rat s = 0;
    for (int i = 0; i < p.dim; ++i) s += Rat(f.normal[i]) * x[i];
    if (s < f.offset) return false;
  }
  return true;
}

bool contains(const Polyhedron& p, const Weight& w) {
  std::vector<Rat> x;
  x.reserve(w.size());
  for (const Int& v : w) x.emplace_back(v);
  return contains(p, x);
}

bool is_feasible(const Polyhedron& p, std::string* certificate) {
  if (p.known_empty) {
    if (certificate) *certificate = p.empty_certificate;
    return false;
  }
  // Rows (a_1 .. a_d | c) meaning sum a_i x_i >= c; eliminate variables from
  // the right, combining opposite-sign pairs (Fourier-Motzkin).
  std::set<std::vector<Int>> rows;
  for (const auto& f : p.facets) {
    std::vector<Rat> row;
    for (const Int& v : f.normal) row.emplace_back(v);
    row.push_back(f.offset);
    rows.insert(normalize_row(row));
  }
  for (int vars = p.dim; vars > 0; --vars) {
    std::vector<std::vector<Int>> pos, neg, zero;
    for (const auto& r : rows) {
      const Int& a = r[vars - 1];
      if (a > 0)
        pos.push_back(r);
      else if (a < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    std::set<std::vector<Int>> next;
    for (const auto& r : zero) {
      // Drop the eliminated variable's (zero) slot so the row keeps the
      // uniform layout of coefficients followed by the constant.
      std::vector<Int> kept(r.begin(), r.begin() + (vars - 1));
      kept.push_back(r[vars]);
      next.insert(std::move(kept));
    }
    for (const auto& rp : pos)
      for (const auto& rn : neg) {
        // rn scaled by a_p plus rp scaled by -a_n cancels the variable.
        const Int& ap = rp[vars - 1];
        const Int an = -rn[vars - 1];
        std::vector<Rat> comb(vars);  // vars-1 coefficients plus constant
        for (int i = 0; i < vars - 1; ++i)
          comb[i] = Rat(an * rp[i] + ap * rn[i]);
        // Constants sit at index `vars` in the parent rows.
        comb[vars - 1] = Rat(an * rp[vars] + ap * rn[vars]);
        next.insert(normalize_row(comb));
        if (next.size() > 20000)
          throw domain_error("feasibility elimination exceeded size bound");
      }
    rows = std::move(next);
  }
  // Zero variables left: rows are (c) meaning 0 >= c.
  for (const auto& r : rows)
    if (r[0] > 0) {
      if (certificate) {
        std::ostringstream msg;
        msg << "variable elimination derives the contradiction 0 >= " << r[0];
        *certificate = msg.str();
      }
      return false;
    }
  return true;
}

std::vector<Vertex> vertices(const Polyhedron& p) {
  if (p.known_empty) return {};
  const int d = p.dim;
  const int m = (int)p.facets.size();
  int nr = rank(normal_matrix(p));
  if (nr < d) {
    if (!is_feasible(p)) return {};
    throw domain_error("polyhedron is not pointed: facet normals span rank " +
                       std::to_string(nr) + " of " + std::to_string(d));
  }
  std::map<std::vector<Rat>, std::set<int>> found;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  auto advance = [&]() -> bool {
    int i = d - 1;
    while (i >= 0 && idx[i] == m - d + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (m < d) return {};
  while (true) {
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
    std::vector<Rat> b(d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) a[r][c] = Rat(p.facets[idx[r]].normal[c]);
      b[r] = p.facets[idx[r]].offset;
    }
    if (auto x = solve_square(std::move(a), std::move(b))) {
      if (contains(p, *x)) {
        auto& act = found[*x];
        for (int f = 0; f < m; ++f) {
          Rat s = 0;
          for (int c = 0; c < d; ++c) s += Rat(p.facets[f].normal[c]) * (*x)[c];
          if (s == p.facets[f].offset) act.insert(f);
        }
      }
    }
    if (!advance()) break;
  }
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [pt, act] : found)
    out.push_back(Vertex{pt, std::vector<int>(act.begin(), act.end())});
  return out;
}

bool is_bounded(const Polyhedron& p) {
  if (p.known_empty) return true;
  const int d = p.dim;
  IMat nm = normal_matrix(p);
  if (rank(nm) < d) return false;  // recession cone contains a line
  const int m = (int)nm.size();
  auto admits_ray = [&](const Weight& v) {
    bool nonzero = false;
    for (const Int& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) return false;
    for (const auto& row : nm) {
      Int s = 0;
      for (int i = 0; i < d; ++i) s += row[i] * v[i];
      if (s < 0) return false;
    }
    return true;
  };
  if (d == 1) {
    Weight e{Int(1)};
    Weight me{Int(-1)};
    return !admits_ray(e) && !admits_ray(me);
  }
  // Candidate extreme rays: one-dimensional null spaces of (d-1)-subsets.
  std::vector<int> idx(d - 1);
  for (int i = 0; i < d - 1; ++i) idx[i] = i;
  auto advance = [&]() -> bool {
    int i = d - 2;
    while (i >= 0 && idx[i] == m - (d - 1) + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d - 1; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (m < d - 1) return false;  // cannot be pointed and bounded with so few
  while (true) {
    // Null space of the (d-1) x d subsystem via rational elimination.
    std::vector<std::vector<Rat>> a(d - 1, std::vector<Rat>(d));
    for (int r = 0; r < d - 1; ++r)
      for (int c = 0; c < d; ++c) a[r][c] = Rat(nm[idx[r]][c]);
    // Reduce to row echelon; find the single free column if rank is d-1.
    std::vector<int> pivot_col;
    int rr = 0;
    for (int c = 0; c < d && rr < d - 1; ++c) {
      int piv = -1;
      for (int r = rr; r < d - 1; ++r)
        if (a[r][c] != 0) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(a[rr], a[piv]);
      for (int r = 0; r < d - 1; ++r) {
        if (r == rr || a[r][c] == 0) continue;
        Rat f = a[r][c] / a[rr][c];
        for (int k = c; k < d; ++k) a[r][k] -= f * a[rr][k];
      }
      pivot_col.push_back(c);
      ++rr;
    }
    if (rr == d - 1) {
      int free_col = -1;
      for (int c = 0, k = 0; c < d; ++c) {
        if (k < (int)pivot_col.size() && pivot_col[k] == c) { ++k; continue; }
        free_col = c;
        break;
      }
      std::vector<Rat> v(d, Rat(0));
      v[free_col] = 1;
      for (int r = 0; r < d - 1; ++r)
        v[pivot_col[r]] = -a[r][free_col] / a[r][pivot_col[r]];
      // Scale to a primitive integer direction.
      Int denlcm = 1;
      for (const Rat& q : v) denlcm = boost::multiprecision::lcm(denlcm, rat_den(q));
      Weight w(d);
      for (int i = 0; i < d; ++i) w[i] = rat_num(v[i]) * (denlcm / rat_den(v[i]));
      make_primitive(w);
      Weight mw = w;
      for (Int& x : mw) x = -x;
      if (admits_ray(w) || admits_ray(mw)) return false;
    }
    if (!advance()) break;
  }
  return true;
}

DelzantReport delzant_check(const Polyhedron& p) {
  DelzantReport rep;
  auto vs = vertices(p);
  for (const auto& v : vs) {
    if ((int)v.active_facets.size() != p.dim) {
      std::ostringstream msg;
      msg << v.active_facets.size() << " active facets (need " << p.dim << ")";
      rep.violations.push_back(DelzantViolation{v.point, msg.str()});
      continue;
    }
    IMat nm;
    for (int f : v.active_facets) nm.push_back(p.facets[f].normal);
    Int dt = det(nm);
    if (dt != 1 && dt != -1) {
      std::ostringstream msg;
      msg << "active normals have determinant " << dt;
      rep.violations.push_back(DelzantViolation{v.point, msg.str()});
    }
  }
  rep.is_delzant = rep.violations.empty();
  return rep;
}

std::vector<Weight> lattice_points(const Polyhedron& p,
                                   const std::optional<Box>& box) {
  if (p.known_empty) return {};
  const int d = p.dim;
  Box b;
  if (box) {
    b = *box;
    if ((int)b.lo.size() != d || (int)b.hi.size() != d)
      throw domain_error("bounding box dimension mismatch");
  } else {
    if (!is_bounded(p))
      throw domain_error("unbounded polyhedron requires a bounding box");
    auto vs = vertices(p);
    if (vs.empty()) return {};
    b.lo.assign(d, 0);
    b.hi.assign(d, 0);
    for (int i = 0; i < d; ++i) {
      Rat lo = vs[0].point[i], hi = vs[0].point[i];
      for (const auto& v : vs) {
        lo = std::min(lo, v.point[i]);
        hi = std::max(hi, v.point[i]);
      }
      b.lo[i] = rat_ceil(lo);
      b.hi[i] = rat_floor(hi);
    }
  }
  Int cells = 1;
  for (int i = 0; i < d; ++i) {
    if (b.lo[i] > b.hi[i]) return {};
    cells *= b.hi[i] - b.lo[i] + 1;
  }
  if (cells > 50000000)
    throw domain_error("lattice point enumeration box too large (" +
                       cells.str() + " cells)");
  std::vector<Weight> out;
  Weight x = b.lo;
  while (true) {
    if (contains(p, x)) out.push_back(x);
    int i = d - 1;
    while (i >= 0 && x[i] == b.hi[i]) --i;
    if (i < 0) break;
    ++x[i];
    for (int j = i + 1; j < d; ++j) x[j] = b.lo[j];
  }
  return out;
}

Polyhedron slice(const Polyhedron& p, const Weight& xi, const Int& level) {
  const int d = p.dim;
  if (d < 2) throw domain_error("slice requires dimension >= 2");
  if ((int)xi.size() != d)
    throw domain_error("slice direction has " + std::to_string(xi.size()) +
                       " entries, expected " + std::to_string(d));
  IMat w = unimodular_reducing(xi);  // throws when xi is not primitive
  // Adapted coordinates x = level * u1 + sum_j y_j b_j with u1 = row 0 of W
  // and b_j = row j of W; then <xi, x> = level identically and y -> x is a
  // bijection of lattices. A facet <n, x> >= c becomes, with z = W n,
  //   sum_j z_j y_j >= c - level * z_0.
  Polyhedron out;
  out.dim = d - 1;
  out.name = p.name.empty() ? "" : p.name + "|slice";
  if (p.known_empty) {
    out.known_empty = true;
    out.empty_certificate = p.empty_certificate;
    return out;
  }
  std::set<std::pair<std::vector<Int>, Rat>> seen;
  for (std::size_t fi = 0; fi < p.facets.size(); ++fi) {
    const auto& f = p.facets[fi];
    Weight z = mat_vec(w, f.normal);
    std::vector<Int> nn(z.begin() + 1, z.end());
    Rat off = f.offset - Rat(level * z[0]);
    if (content(nn) == 0) {
      if (off > 0 && !out.known_empty) {
        std::ostringstream msg;
        msg << "facet " << fi << " restricts to the violated constant "
            << "constraint 0 >= " << rational_to_string(off);
        out.known_empty = true;
        out.empty_certificate = msg.str();
      }
      continue;  // constant constraint carries no facet either way
    }
    Int g = content(nn);
    if (g > 1) {
      for (Int& v : nn) v /= g;
      off /= Rat(g);
    }
    if (seen.emplace(nn, off).second)
      out.facets.push_back(Halfspace{std::move(nn), std::move(off)});
  }
  if (!out.known_empty) {
    std::string cert;
    if (!is_feasible(out, &cert)) {
      out.known_empty = true;
      out.empty_certificate = cert;
    }
  }
  return out;
}

namespace {

Rat offset_from_json(const Json& j, std::size_t facet_index) {
  if (j.is_number_integer()) return Rat(Int((long long)j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const parse_error& e) {
      throw parse_error("facet " + std::to_string(facet_index) + ": " +
                        e.what());
    }
  }
  throw parse_error("facet " + std::to_string(facet_index) +
                    ": offset must be an integer or a \"p/q\" string");
}

}  // namespace

Polyhedron polytope_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("polytope document must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "dim" && key != "name" && key != "facets")
      throw parse_error("unknown key '" + key + "' in polytope document");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw parse_error("polytope document requires an integer 'dim'");
  int dim = doc["dim"].get<int>();
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw parse_error("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("facets") || !doc["facets"].is_array())
    throw parse_error("polytope document requires a 'facets' array");
  std::vector<Halfspace> facets;
  std::size_t fi = 0;
  for (const auto& fj : doc["facets"]) {
    if (!fj.is_object())
      throw parse_error("facet " + std::to_string(fi) + ": must be an object");
    for (const auto& [key, value] : fj.items()) {
      (void)value;
      if (key != "normal" && key != "offset")
        throw parse_error("facet " + std::to_string(fi) + ": unknown key '" +
                          key + "'");
    }
    if (!fj.contains("normal") || !fj["normal"].is_array())
      throw parse_error("facet " + std::to_string(fi) +
                        ": requires a 'normal' array");
    if (!fj.contains("offset"))
      throw parse_error("facet " + std::to_string(fi) + ": requires 'offset'");
    Halfspace h;
    for (const auto& e : fj["normal"]) {
      if (!e.is_number_integer())
        throw parse_error("facet " + std::to_string(fi) +
                          ": normal entries must be integers");
      h.normal.emplace_back((long long)e.get<std::int64_t>());
    }
    h.offset = offset_from_json(fj["offset"], fi);
    facets.push_back(std::move(h));
    ++fi;
  }
  return make_polyhedron(dim, std::move(facets), std::move(name));
}

std::string polytope_to_json(const Polyhedron& p) {
  Json doc;
  doc["dim"] = p.dim;
  if (!p.name.empty()) doc["name"] = p.name;
  doc["facets"] = Json::array();
  for (const auto& f : p.facets) {
    Json fj;
    fj["normal"] = Json::array();
    for (const Int& v : f.normal) {
      if (v > Int(std::numeric_limits<std::int64_t>::max()) ||
          v < Int(std::numeric_limits<std::int64_t>::min()))
        throw domain_error("facet normal entry too large to serialize");
      fj["normal"].push_back(v.convert_to<std::int64_t>());
    }
    if (rat_den(f.offset) == 1 &&
        rat_num(f.offset) <= Int(std::numeric_limits<std::int64_t>::max()) &&
        rat_num(f.offset) >= Int(std::numeric_limits<std::int64_t>::min()))
      fj["offset"] = rat_num(f.offset).convert_to<std::int64_t>();
    else
      fj["offset"] = rational_to_string(f.offset);
    doc["facets"].push_back(std::move(fj));
  }
  return doc.dump(2) + "\n";
}

Polyhedron load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open polytope file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return polytope_from_json(buf.str());
}

}  // namespace latloc
