#include "ptrace/io.hpp"

#include <fstream>
#include <sstream>

#include "ptrace/errors.hpp"
#include "ptrace/parse.hpp"

namespace ptrace {

namespace {

std::string text_of(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ValidationError(where + ": expected a polynomial string, got " + v.dump());
}

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing key '") + key + "'");
  return j.at(key);
}

int parse_field(const Json& f) {
  if (f.is_string()) {
    if (f.get<std::string>() == "Q") return 1;
    throw ValidationError("unknown field " + f.dump() + " (use \"Q\" or {\"cyclotomic\": n})");
  }
  if (f.is_object() && f.contains("cyclotomic")) {
    const int n = f.at("cyclotomic").get<int>();
    if (n < 1) throw ValidationError("cyclotomic order must be positive");
    return n;
  }
  throw ValidationError("unknown field " + f.dump());
}

Json field_json(int order) { return order == 1 ? Json("Q") : Json{{"cyclotomic", order}}; }

std::vector<std::vector<Poly>> parse_matrix(const Json& m, const RingPtr& ring, int field) {
  const std::size_t n = ring->nvars();
  if (!m.is_array() || m.size() != n) throw ValidationError("bracket matrix needs " + std::to_string(n) + " rows");
  std::vector<std::vector<Poly>> pi(n, std::vector<Poly>(n, Poly(ring)));
  bool triangle = true;
  for (std::size_t i = 0; i < n; ++i) triangle = triangle && m[i].is_array() && m[i].size() == n - 1 - i;
  if (triangle) {
    // Strict upper triangle: row i lists {x_i, x_j} for j > i.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        pi[i][j] = parse_poly(text_of(m[i][j - i - 1], "bracket matrix"), ring, field);
        pi[j][i] = -pi[i][j];
      }
    return pi;
  }
  bool lower_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw ValidationError("bracket matrix rows must have length " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      pi[i][j] = parse_poly(text_of(m[i][j], "bracket matrix"), ring, field);
      if (j < i && !pi[i][j].is_zero()) lower_zero = false;
    }
  }
  if (lower_zero)  // upper triangle given in a full matrix
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) pi[i][j] = -pi[j][i];
  return pi;
}

std::optional<long> infer_shift(const RingPtr& ring, const std::vector<std::vector<Poly>>& pi, const std::vector<Poly>& ideal) {
  for (const auto& g : ideal)
    if (!g.is_homogeneous()) return std::nullopt;
  std::optional<long> d;
  const Weights& w = ring->weights();
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j) {
      if (pi[i][j].is_zero()) continue;
      auto deg = pi[i][j].homogeneous_degree();
      if (!deg) return std::nullopt;
      const long e = w[i] + w[j] - *deg;
      if (d && *d != e) return std::nullopt;
      d = e;
    }
  return d.value_or(0);
}

DenseMatrix parse_group_matrix(const Json& m, std::size_t n, int field) {
  if (!m.is_array() || m.size() != n) throw ValidationError("group generators must be " + std::to_string(n) + "x" + std::to_string(n));
  DenseMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw ValidationError("group generator rows must have length " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) g(i, j) = parse_scalar(text_of(m[i][j], "group generator"), field);
  }
  return g;
}

std::string dimension_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "empty"; }

Json codim_json(const Codimension& c) { return c ? Json(*c) : Json("infinite"); }

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    } else if (v.is_array()) {
      out << indent << key << ":";
      const char* sep = " ";
      for (const auto& x : v) {
        out << sep << (x.is_string() ? x.get<std::string>() : x.dump());
        sep = ", ";
      }
      out << "\n";
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

Document parse_document(const Json& j) {
  try {
    if (!j.is_object()) throw ValidationError("presentation must be a JSON object");
    Document doc;
    doc.name = j.value("name", std::string());
    if (j.contains("field"))
      doc.field_order = parse_field(j.at("field"));
    else if (j.contains("group") && j.at("group").contains("field"))
      doc.field_order = parse_field(j.at("group").at("field"));

    const auto names = require(j, "variables").get<std::vector<std::string>>();
    std::vector<int> weights = j.contains("weights") ? j.at("weights").get<std::vector<int>>() : std::vector<int>(names.size(), 1);
    auto ring = make_ring(names, weights);
    const int field = doc.field_order;

    std::vector<Poly> ideal;
    if (j.contains("ideal"))
      for (const auto& g : j.at("ideal")) ideal.push_back(parse_poly(text_of(g, "ideal"), ring, field));

    const Json& br = require(j, "bracket");
    std::vector<std::vector<Poly>> pi;
    std::optional<Poly> jacobian;
    if (br.contains("matrix")) {
      doc.bracket_kind = BracketKind::Matrix;
      pi = parse_matrix(br.at("matrix"), ring, field);
    } else if (br.contains("jacobian_of")) {
      doc.bracket_kind = BracketKind::Jacobian;
      if (names.size() != 3) throw ValidationError("jacobian_of needs exactly 3 variables");
      Poly F = parse_poly(text_of(br.at("jacobian_of"), "jacobian_of"), ring, field);
      const Poly Fx = F.derivative(0), Fy = F.derivative(1), Fz = F.derivative(2), zero(ring);
      pi = {{zero, Fz, -Fy}, {-Fz, zero, Fx}, {Fy, -Fx, zero}};
      if (!j.contains("ideal")) ideal = {F};
      jacobian = F;
    } else if (br.contains("symplectic_pairs")) {
      doc.bracket_kind = BracketKind::Symplectic;
      const std::size_t pairs = br.at("symplectic_pairs").get<std::size_t>();
      if (names.size() != 2 * pairs) throw ValidationError("symplectic_pairs = " + std::to_string(pairs) + " needs " +
                                                           std::to_string(2 * pairs) + " variables");
      pi.assign(names.size(), std::vector<Poly>(names.size(), Poly(ring)));
      for (std::size_t i = 0; i < pairs; ++i) {
        pi[2 * i][2 * i + 1] = Poly(ring, Scalar(1));
        pi[2 * i + 1][2 * i] = Poly(ring, Scalar(-1));
      }
    } else {
      throw ValidationError("bracket must contain 'matrix', 'jacobian_of' or 'symplectic_pairs'");
    }

    std::optional<long> d;
    if (!j.contains("degree_shift"))
      d = infer_shift(ring, pi, ideal);
    else if (!j.at("degree_shift").is_null())
      d = j.at("degree_shift").get<long>();

    auto P = std::make_shared<PoissonPresentation>(ring, ideal, std::move(pi), d, field);
    if (jacobian) P->set_jacobian_of(*jacobian);
    verify_poisson(*P);
    doc.presentation = P;

    if (j.contains("group")) {
      const Json& g = j.at("group");
      for (const auto& m : require(g, "generators")) doc.group_generators.push_back(parse_group_matrix(m, names.size(), field));
      doc.group = close_group(doc.group_generators);
      if (!preserves_presentation(*doc.group, *P)) throw ValidationError("group does not preserve the Poisson structure");
    }
    if (j.contains("morphism")) {
      const Json& m = j.at("morphism");
      if (m.is_string() && m.get<std::string>() == "invariants") {
        if (!doc.group) throw ValidationError("morphism \"invariants\" needs a group");
        doc.morphism = MorphismKind::Invariants;
      } else if (m.is_string() && m.get<std::string>() == "identity") {
        doc.morphism = MorphismKind::Identity;
      } else if (m.is_object() && m.contains("images")) {
        doc.morphism = MorphismKind::Images;
        for (const auto& f : m.at("images")) doc.images.push_back(parse_poly(text_of(f, "morphism image"), ring, field));
      } else {
        throw ValidationError("morphism must be \"invariants\", \"identity\" or {\"images\": [...]}");
      }
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed presentation JSON: ") + e.what());
  }
}

Document parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

Json to_json(const Document& d) {
  const PoissonPresentation& P = *d.presentation;
  const RingPtr& r = P.ring();
  Json j;
  if (!d.name.empty()) j["name"] = d.name;
  j["field"] = field_json(d.field_order);
  j["variables"] = r->names();
  j["weights"] = r->weights().values();
  Json ideal = Json::array();
  for (const auto& g : P.ideal_generators()) ideal.push_back(g.to_string());
  j["ideal"] = ideal;
  switch (d.bracket_kind) {
    case BracketKind::Jacobian:
      j["bracket"] = {{"jacobian_of", P.jacobian_of()->to_string()}};
      break;
    case BracketKind::Symplectic:
      j["bracket"] = {{"symplectic_pairs", P.nvars() / 2}};
      break;
    case BracketKind::Matrix: {
      Json rows = Json::array();
      for (std::size_t i = 0; i < P.nvars(); ++i) {
        Json row = Json::array();
        for (std::size_t k = i + 1; k < P.nvars(); ++k) row.push_back(P.entry(i, k).to_string());
        rows.push_back(row);
      }
      j["bracket"] = {{"matrix", rows}};
      break;
    }
  }
  j["degree_shift"] = P.degree_shift() ? Json(*P.degree_shift()) : Json(nullptr);
  if (!d.group_generators.empty()) {
    Json gens = Json::array();
    for (const auto& g : d.group_generators) {
      Json m = Json::array();
      for (std::size_t i = 0; i < g.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(g(i, k).to_string());
        m.push_back(row);
      }
      gens.push_back(m);
    }
    j["group"] = {{"generators", gens}};
  }
  if (d.morphism == MorphismKind::Invariants) j["morphism"] = "invariants";
  if (d.morphism == MorphismKind::Images) {
    Json imgs = Json::array();
    for (const auto& f : d.images) imgs.push_back(f.to_string());
    j["morphism"] = {{"images", imgs}};
  }
  return j;
}

MorphismPresentation morphism_of(const Document& d, const Budget& budget) {
  switch (d.morphism) {
    case MorphismKind::Identity:
      return MorphismPresentation::identity(d.presentation);
    case MorphismKind::Images:
      return MorphismPresentation(d.presentation, d.images);
    case MorphismKind::Invariants:
      return MorphismPresentation(d.presentation, invariant_generators(*d.group, d.presentation->ring(), budget));
  }
  return MorphismPresentation::identity(d.presentation);
}

Json to_json(const HP0Report& r, std::uint64_t seed) {
  Json j;
  j["per_degree"] = r.per_degree;
  if (r.invariant_per_degree) j["invariant_per_degree"] = *r.invariant_per_degree;
  j["total"] = r.total;
  if (r.invariant_total) j["invariant_total"] = *r.invariant_total;
  j["max_degree"] = r.max_degree;
  j["bound"] = r.bound_computed ? codim_json(r.bound) : Json(nullptr);
  j["status"] = to_string(r.status);
  j["seeds"] = r.seeds;
  j["seed"] = seed;
  return j;
}

Json to_json(const BoundReport& r) {
  Json samples = Json::array(), seeds = Json::array();
  for (const auto& s : r.samples) {
    seeds.push_back(s.seed);
    Json o;
    o["seed"] = s.seed;
    o["covector"] = s.covector;
    o["codimension"] = s.error ? Json(nullptr) : codim_json(s.codim);
    if (s.error) o["error"] = *s.error;
    samples.push_back(o);
  }
  Json j;
  j["samples"] = samples;
  j["best"] = r.best ? Json(*r.best) : Json(nullptr);
  j["seeds"] = seeds;
  return j;
}

Json to_json(const LeafReport& r) {
  Json j;
  j["ambient_dimension"] = r.ambient_dimension;
  j["dim_X"] = dimension_text(r.dim_x);
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json o;
    o["rank_at_most"] = l.rank;
    o["dimension"] = l.dimension ? Json(*l.dimension) : Json("empty");
    o["ok"] = l.ok;
    levels.push_back(o);
  }
  j["levels"] = levels;
  j["verdict"] = r.verdict ? "pass" : "fail";
  return j;
}

Json to_json(const SingularSupportReport& r) {
  Json j;
  j["ambient_dimension"] = r.ambient_dimension;
  j["dim_V"] = r.dim_v;
  j["dim_Z"] = r.dim_z ? Json(*r.dim_z) : Json("empty");
  j["verdict"] = r.verdict ? "pass" : "fail";
  j["label"] = r.verdict ? "holonomicity bound satisfied" : "holonomicity bound not satisfied";
  Json ideal = Json::array();
  for (const auto& g : r.ideal) ideal.push_back(g.to_string());
  j["ideal"] = ideal;
  return j;
}

Json to_json(const GroebnerBasis& gb) {
  Json basis = Json::array();
  for (const auto& g : gb.polys()) basis.push_back(g.to_string());
  Json j;
  j["variables"] = gb.ring()->names();
  j["weights"] = gb.ring()->weights().values();
  j["order"] = gb.ring()->order().kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex";
  j["basis"] = basis;
  return j;
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  if (j.is_object() || j.is_array())
    render(j, "", out);
  else
    out << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  return out.str();
}

}  // namespace ptrace
