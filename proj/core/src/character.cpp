#include <latloc/character.hpp>

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

namespace latloc {

namespace {

using Json = nlohmann::ordered_json;
using FiniteTerm = FormalCharacter::FiniteTerm;
using IndicatorTerm = FormalCharacter::IndicatorTerm;
using PushforwardTerm = FormalCharacter::PushforwardTerm;
using Term = FormalCharacter::Term;

// Merge all finite-support terms into a single coefficient-1 FiniteTerm with
// no zero values; drop terms with zero outer coefficient.
FormalCharacter normalized(FormalCharacter a) {
  FiniteTerm merged;
  std::vector<std::pair<std::int64_t, Term>> rest;
  for (auto& [c, t] : a.terms) {
    if (c == 0) continue;
    if (auto* f = std::get_if<FiniteTerm>(&t)) {
      for (auto& [w, m] : f->coeffs) {
        auto it = merged.coeffs.find(w);
        std::int64_t v = (it == merged.coeffs.end() ? 0 : it->second) + c * m;
        if (v == 0) {
          if (it != merged.coeffs.end()) merged.coeffs.erase(it);
        } else {
          merged.coeffs[w] = v;
        }
      }
    } else {
      rest.emplace_back(c, std::move(t));
    }
  }
  FormalCharacter out;
  out.rank = a.rank;
  if (!merged.coeffs.empty()) out.terms.emplace_back(1, std::move(merged));
  for (auto& t : rest) out.terms.push_back(std::move(t));
  return out;
}

std::int64_t pushforward_value(const PushforwardTerm& t, const Int& m) {
  if (t.base.dim == 1) {
    // Rank-1 base: the fiber of <xi, x> = m is the single point x = xi * m.
    Weight x{t.xi[0] * m};
    return contains(t.base, x) ? 1 : 0;
  }
  Polyhedron s = slice(t.base, t.xi, m);
  if (!is_bounded(s))
    throw domain_error("fiber at level " + m.str() + " along " +
                       weight_to_string(t.xi) +
                       " is unbounded; quantization requires compact fibers");
  return (std::int64_t)lattice_points(s).size();
}

std::int64_t term_value(const Term& t, const Weight& w) {
  if (const auto* f = std::get_if<FiniteTerm>(&t)) {
    auto it = f->coeffs.find(w);
    return it == f->coeffs.end() ? 0 : it->second;
  }
  if (const auto* ind = std::get_if<IndicatorTerm>(&t))
    return contains(ind->p, w) ? 1 : 0;
  const auto& pf = std::get<PushforwardTerm>(t);
  return pushforward_value(pf, w[0]);
}

// Translate a term by the lattice vector v: (shift f)(x) = f(x - v).
Term shift_term(const Term& t, const Weight& v) {
  if (const auto* f = std::get_if<FiniteTerm>(&t)) {
    FiniteTerm out;
    for (const auto& [w, m] : f->coeffs) {
      Weight nw = w;
      for (std::size_t i = 0; i < nw.size(); ++i) nw[i] += v[i];
      out.coeffs.emplace(std::move(nw), m);
    }
    return out;
  }
  if (const auto* ind = std::get_if<IndicatorTerm>(&t)) {
    Polyhedron p = ind->p;
    for (auto& f2 : p.facets) {
      Int dot = 0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += f2.normal[i] * v[i];
      f2.offset += Rat(dot);
    }
    return IndicatorTerm{std::move(p)};
  }
  // Rank-1 pushforward shifted by k: translate the base by k * u where
  // <xi, u> = 1 (u = row 0 of the unimodular matrix sending xi to e1).
  const auto& pf = std::get<PushforwardTerm>(t);
  IMat w = unimodular_reducing(pf.xi);
  Polyhedron p = pf.base;
  const Int& k = v[0];
  for (auto& f2 : p.facets) {
    Int dot = 0;
    for (std::size_t i = 0; i < f2.normal.size(); ++i)
      dot += f2.normal[i] * w[0][i] * k;
    f2.offset += Rat(dot);
  }
  return PushforwardTerm{std::move(p), pf.xi};
}

// Try to realize a character as a plain multiplicity map (expanding bounded
// indicator terms); nullopt when some term has genuinely infinite support.
std::optional<std::map<Weight, std::int64_t>> force_finite(
    const FormalCharacter& a) {
  std::map<Weight, std::int64_t> out;
  auto bump = [&](const Weight& w, std::int64_t v) {
    auto it = out.find(w);
    std::int64_t nv = (it == out.end() ? 0 : it->second) + v;
    if (nv == 0) {
      if (it != out.end()) out.erase(it);
    } else {
      out[w] = nv;
    }
  };
  for (const auto& [c, t] : a.terms) {
    if (const auto* f = std::get_if<FiniteTerm>(&t)) {
      for (const auto& [w, m] : f->coeffs) bump(w, c * m);
    } else if (const auto* ind = std::get_if<IndicatorTerm>(&t)) {
      if (ind->p.known_empty) continue;
      if (!is_bounded(ind->p)) return std::nullopt;
      for (const auto& w : lattice_points(ind->p)) bump(w, c);
    } else {
      return std::nullopt;  // lazy pushforward: infinite support
    }
  }
  return out;
}

void check_rank(const FormalCharacter& a, const Weight& w, const char* what) {
  if ((int)w.size() != a.rank)
    throw domain_error(std::string(what) + ": weight has " +
                       std::to_string(w.size()) + " entries, character rank is " +
                       std::to_string(a.rank));
}

}  // namespace

bool FormalCharacter::is_finite_support() const {
  for (const auto& [c, t] : terms) {
    (void)c;
    if (!std::holds_alternative<FiniteTerm>(t)) return false;
  }
  return true;
}

FormalCharacter delta(const Weight& w) {
  FormalCharacter a;
  a.rank = (int)w.size();
  FiniteTerm f;
  f.coeffs[w] = 1;
  a.terms.emplace_back(1, std::move(f));
  return a;
}

FormalCharacter indicator(const Polyhedron& p) {
  FormalCharacter a;
  a.rank = p.dim;
  a.terms.emplace_back(1, IndicatorTerm{p});
  return a;
}

FormalCharacter zero_character(int rank) {
  FormalCharacter a;
  a.rank = rank;
  return a;
}

std::int64_t evaluate(const FormalCharacter& a, const Weight& w) {
  check_rank(a, w, "evaluate");
  std::int64_t v = 0;
  for (const auto& [c, t] : a.terms) v += c * term_value(t, w);
  return v;
}

FormalCharacter add(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.rank != b.rank)
    throw domain_error("add: rank mismatch (" + std::to_string(a.rank) +
                       " vs " + std::to_string(b.rank) + ")");
  FormalCharacter out;
  out.rank = a.rank;
  out.terms = a.terms;
  for (const auto& t : b.terms) out.terms.push_back(t);
  return normalized(std::move(out));
}

FormalCharacter scale(std::int64_t c, const FormalCharacter& a) {
  FormalCharacter out = a;
  for (auto& [co, t] : out.terms) {
    (void)t;
    co *= c;
  }
  return normalized(std::move(out));
}

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b,
                       TensorMode mode) {
  if (mode == TensorMode::same_torus) {
    if (a.rank != b.rank)
      throw domain_error("tensor(same_torus): rank mismatch (" +
                         std::to_string(a.rank) + " vs " +
                         std::to_string(b.rank) + ")");
    // Convolution: at least one side must have finite total support.
    auto fa = force_finite(a);
    const FormalCharacter* other = &b;
    auto fin = std::move(fa);
    if (!fin) {
      fin = force_finite(b);
      other = &a;
    }
    if (!fin)
      throw domain_error(
          "tensor(same_torus) requires at least one factor with finite "
          "support; both factors have infinite support");
    FormalCharacter out;
    out.rank = a.rank;
    for (const auto& [w, m] : *fin)
      for (const auto& [c, t] : other->terms)
        out.terms.emplace_back(m * c, shift_term(t, w));
    return normalized(std::move(out));
  }
  // Outer product: ranks add.
  auto pad_polyhedron = [](const Polyhedron& p, int left, int right) {
    Polyhedron out;
    out.dim = left + p.dim + right;
    out.name = p.name;
    out.known_empty = p.known_empty;
    out.empty_certificate = p.empty_certificate;
    for (const auto& f : p.facets) {
      Halfspace h;
      h.normal.assign(left, 0);
      h.normal.insert(h.normal.end(), f.normal.begin(), f.normal.end());
      h.normal.insert(h.normal.end(), right, 0);
      h.offset = f.offset;
      out.facets.push_back(std::move(h));
    }
    return out;
  };
  auto point_polyhedron = [](const Weight& w) {
    // {w} as an H-polytope: two opposite facets per coordinate.
    Polyhedron p;
    p.dim = (int)w.size();
    for (int i = 0; i < p.dim; ++i) {
      std::vector<Int> e(p.dim, 0), me(p.dim, 0);
      e[i] = 1;
      me[i] = -1;
      p.facets.push_back(Halfspace{e, Rat(w[i])});
      p.facets.push_back(Halfspace{me, Rat(-w[i])});
    }
    return p;
  };
  FormalCharacter out;
  out.rank = a.rank + b.rank;
  for (const auto& [ca, ta] : a.terms)
    for (const auto& [cb, tb] : b.terms) {
      std::int64_t c = ca * cb;
      const auto* fa = std::get_if<FiniteTerm>(&ta);
      const auto* fb = std::get_if<FiniteTerm>(&tb);
      const auto* ia = std::get_if<IndicatorTerm>(&ta);
      const auto* ib = std::get_if<IndicatorTerm>(&tb);
      // Explicitly-empty indicator factors are zero characters.
      if ((ia && ia->p.known_empty) || (ib && ib->p.known_empty)) continue;
      if (fa && fb) {
        FiniteTerm f;
        for (const auto& [wa, ma] : fa->coeffs)
          for (const auto& [wb, mb] : fb->coeffs) {
            Weight w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            f.coeffs[std::move(w)] = ma * mb;
          }
        out.terms.emplace_back(c, std::move(f));
      } else if (fa && ib) {
        for (const auto& [wa, ma] : fa->coeffs) {
          Polyhedron prod = pad_polyhedron(ib->p, a.rank, 0);
          Polyhedron pt = point_polyhedron(wa);
          for (const auto& f2 : pad_polyhedron(pt, 0, b.rank).facets)
            prod.facets.push_back(f2);
          out.terms.emplace_back(c * ma, IndicatorTerm{std::move(prod)});
        }
      } else if (ia && fb) {
        for (const auto& [wb, mb] : fb->coeffs) {
          Polyhedron prod = pad_polyhedron(ia->p, 0, b.rank);
          Polyhedron pt = point_polyhedron(wb);
          for (const auto& f2 : pad_polyhedron(pt, a.rank, 0).facets)
            prod.facets.push_back(f2);
          out.terms.emplace_back(c * mb, IndicatorTerm{std::move(prod)});
        }
      } else if (ia && ib) {
        Polyhedron prod = pad_polyhedron(ia->p, 0, b.rank);
        for (const auto& f2 : pad_polyhedron(ib->p, a.rank, 0).facets)
          prod.facets.push_back(f2);
        out.terms.emplace_back(c, IndicatorTerm{std::move(prod)});
      } else {
        throw domain_error(
            "tensor(outer) does not support lazy pushforward factors");
      }
    }
  return normalized(std::move(out));
}

FormalCharacter restrict_character(const FormalCharacter& a, const Weight& xi) {
  check_rank(a, xi, "restrict");
  if (a.rank == 1) {
    if (xi[0] == 1) return a;
    if (xi[0] == -1) {
      // Reflection through the origin.
      FormalCharacter out;
      out.rank = 1;
      for (const auto& [c, t] : a.terms) {
        if (const auto* f = std::get_if<FiniteTerm>(&t)) {
          FiniteTerm nf;
          for (const auto& [w, m] : f->coeffs) nf.coeffs[Weight{-w[0]}] = m;
          out.terms.emplace_back(c, std::move(nf));
        } else if (const auto* ind = std::get_if<IndicatorTerm>(&t)) {
          Polyhedron p = ind->p;
          for (auto& f2 : p.facets) f2.normal[0] = -f2.normal[0];
          out.terms.emplace_back(c, IndicatorTerm{std::move(p)});
        } else {
          const auto& pf = std::get<PushforwardTerm>(t);
          Polyhedron p = pf.base;
          for (auto& f2 : p.facets)
            for (Int& v : f2.normal) v = -v;
          out.terms.emplace_back(c, PushforwardTerm{std::move(p), pf.xi});
        }
      }
      return normalized(std::move(out));
    }
    throw domain_error("restrict: direction " + weight_to_string(xi) +
                       " is not primitive");
  }
  if (!is_primitive(xi))
    throw domain_error("restrict: direction " + weight_to_string(xi) +
                       " is not primitive (content " + content(xi).str() + ")");
  FormalCharacter out;
  out.rank = 1;
  for (const auto& [c, t] : a.terms) {
    if (const auto* f = std::get_if<FiniteTerm>(&t)) {
      FiniteTerm nf;
      for (const auto& [w, m] : f->coeffs) {
        Int level = 0;
        for (std::size_t i = 0; i < w.size(); ++i) level += xi[i] * w[i];
        nf.coeffs[Weight{level}] += m;
      }
      for (auto it = nf.coeffs.begin(); it != nf.coeffs.end();)
        it = it->second == 0 ? nf.coeffs.erase(it) : std::next(it);
      out.terms.emplace_back(c, std::move(nf));
    } else if (const auto* ind = std::get_if<IndicatorTerm>(&t)) {
      if (ind->p.known_empty) continue;
      if (is_bounded(ind->p)) {
        FiniteTerm nf;
        for (const auto& w : lattice_points(ind->p)) {
          Int level = 0;
          for (std::size_t i = 0; i < w.size(); ++i) level += xi[i] * w[i];
          nf.coeffs[Weight{level}] += 1;
        }
        out.terms.emplace_back(c, std::move(nf));
      } else {
        out.terms.emplace_back(c, PushforwardTerm{ind->p, xi});
      }
    } else {
      throw domain_error(
          "restrict: cannot restrict an already-restricted lazy character "
          "along a nontrivial direction");
    }
  }
  return normalized(std::move(out));
}

std::int64_t total_multiplicity(const FormalCharacter& a) {
  auto fin = force_finite(a);
  if (!fin)
    throw domain_error("total_multiplicity: character does not have finite support");
  std::int64_t s = 0;
  for (const auto& [w, m] : *fin) {
    (void)w;
    s += m;
  }
  return s;
}

std::vector<std::pair<Weight, std::int64_t>> support(const FormalCharacter& a) {
  auto fin = force_finite(a);
  if (!fin)
    throw domain_error("support: character does not have finite support");
  return {fin->begin(), fin->end()};
}

bool probably_equal(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.rank != b.rank) return false;
  auto fa = force_finite(a);
  auto fb = force_finite(b);
  if (fa && fb) return *fa == *fb;
  // Probe a deterministic window; a semi-decision suitable for tests.
  if (a.rank == 1) {
    for (int m = -64; m <= 64; ++m)
      if (evaluate(a, Weight{Int(m)}) != evaluate(b, Weight{Int(m)}))
        return false;
    return true;
  }
  std::mt19937 rng(20240915u);
  std::uniform_int_distribution<int> coord(-8, 8);
  for (int probe = 0; probe < 512; ++probe) {
    Weight w(a.rank);
    for (auto& x : w) x = coord(rng);
    if (evaluate(a, w) != evaluate(b, w)) return false;
  }
  return true;
}

namespace {

Json weight_to_json(const Weight& w) {
  Json a = Json::array();
  for (const Int& v : w) {
    if (v > Int(std::numeric_limits<std::int64_t>::max()) ||
        v < Int(std::numeric_limits<std::int64_t>::min()))
      throw domain_error("weight entry too large to serialize");
    a.push_back(v.convert_to<std::int64_t>());
  }
  return a;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw parse_error("weight entries must be integers");
    w.emplace_back((long long)e.get<std::int64_t>());
  }
  return w;
}

}  // namespace

std::string character_to_json(const FormalCharacter& a) {
  Json doc;
  doc["rank"] = a.rank;
  doc["terms"] = Json::array();
  for (const auto& [c, t] : a.terms) {
    Json tj;
    tj["coeff"] = c;
    if (const auto* f = std::get_if<FiniteTerm>(&t)) {
      tj["kind"] = "finite";
      tj["support"] = Json::array();
      for (const auto& [w, m] : f->coeffs) {
        Json e;
        e["weight"] = weight_to_json(w);
        e["multiplicity"] = m;
        tj["support"].push_back(std::move(e));
      }
    } else if (const auto* ind = std::get_if<IndicatorTerm>(&t)) {
      tj["kind"] = "indicator";
      tj["polytope"] = Json::parse(polytope_to_json(ind->p));
    } else {
      const auto& pf = std::get<PushforwardTerm>(t);
      tj["kind"] = "pushforward";
      tj["base"] = Json::parse(polytope_to_json(pf.base));
      tj["xi"] = weight_to_json(pf.xi);
    }
    doc["terms"].push_back(std::move(tj));
  }
  return doc.dump(2) + "\n";
}

FormalCharacter character_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("terms"))
    throw parse_error("character document requires 'rank' and 'terms'");
  FormalCharacter a;
  a.rank = doc["rank"].get<int>();
  for (const auto& tj : doc["terms"]) {
    std::int64_t c = tj.at("coeff").get<std::int64_t>();
    std::string kind = tj.at("kind").get<std::string>();
    if (kind == "finite") {
      FiniteTerm f;
      for (const auto& e : tj.at("support"))
        f.coeffs[weight_from_json(e.at("weight"))] =
            e.at("multiplicity").get<std::int64_t>();
      a.terms.emplace_back(c, std::move(f));
    } else if (kind == "indicator") {
      a.terms.emplace_back(
          c, IndicatorTerm{polytope_from_json(tj.at("polytope").dump())});
    } else if (kind == "pushforward") {
      a.terms.emplace_back(
          c, PushforwardTerm{polytope_from_json(tj.at("base").dump()),
                             weight_from_json(tj.at("xi"))});
    } else {
      throw parse_error("unknown character term kind '" + kind + "'");
    }
  }
  return normalized(std::move(a));
}

}  // namespace latloc
