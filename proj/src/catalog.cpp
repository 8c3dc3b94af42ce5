#include "ptrace/catalog.hpp"

#include "ptrace/errors.hpp"

namespace ptrace {

namespace {

Json surface(const std::string& name, const std::string& F, std::vector<int> weights) {
  Json j;
  j["name"] = name;
  j["field"] = "Q";
  j["variables"] = {"x", "y", "z"};
  j["weights"] = weights;
  j["ideal"] = Json::array({F});
  j["bracket"] = {{"jacobian_of", F}};
  return j;
}

long parameter(const std::string& name, const std::string& prefix, long lo) {
  const std::string rest = name.substr(prefix.size());
  long n = 0;
  try {
    std::size_t used = 0;
    n = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(rest);
  } catch (const std::exception&) {
    throw ValidationError("example '" + name + "' needs an integer parameter after '" + prefix + "'");
  }
  if (n < lo) throw ValidationError("example '" + name + "' needs a parameter >= " + std::to_string(lo));
  return n;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

Json symplectic(long pairs) {
  Json j;
  j["name"] = "symplectic:" + std::to_string(pairs);
  j["field"] = "Q";
  std::vector<std::string> vars;
  for (long i = 1; i <= pairs; ++i) {
    vars.push_back("x" + std::to_string(i));
    vars.push_back("y" + std::to_string(i));
  }
  j["variables"] = vars;
  j["weights"] = std::vector<int>(vars.size(), 1);
  j["ideal"] = Json::array();
  j["bracket"] = {{"symplectic_pairs", pairs}};
  j["degree_shift"] = 2;
  return j;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"kleinian-a:n", "elliptic-cone", "elliptic-times-plane", "symplectic:n", "symplectic-<dim>",
          "cyclic-quotient:n", "klein-d:n", "klein-e:6", "klein-e:7", "klein-e:8", "zero-plane"};
}

Json example_json(const std::string& name) {
  // Degree shifts: d = w_x + w_y + w_z - deg F for surfaces.
  auto jac = [&](const std::string& F, std::vector<int> w, long degF) {
    Json j = surface(name, F, w);
    j["degree_shift"] = w[0] + w[1] + w[2] - degF;
    return j;
  };
  if (starts_with(name, "kleinian-a:")) {
    const long n = parameter(name, "kleinian-a:", 1);
    const int w = static_cast<int>(n + 1);
    return jac("x*y - z^" + std::to_string(n + 1), {w, w, 2}, 2 * (n + 1));
  }
  if (name == "elliptic-cone") return jac("x^3 + y^3 + z^3", {1, 1, 1}, 3);
  if (name == "elliptic-times-plane") {
    // Z x A^2 with {p, f} = E f (Euler field), {q, f} = 0, {p, q} = 1.
    Json j;
    j["name"] = name;
    j["field"] = "Q";
    j["variables"] = {"x", "y", "z", "p", "q"};
    j["weights"] = {1, 1, 1, 1, 1};
    j["ideal"] = Json::array({"x^3 + y^3 + z^3"});
    j["bracket"] = {{"matrix", Json::array({Json::array({"3*z^2", "-3*y^2", "-x", "0"}),
                                            Json::array({"3*x^2", "-y", "0"}), Json::array({"-z", "0"}),
                                            Json::array({"1"}), Json::array()})}};
    j["degree_shift"] = nullptr;
    return j;
  }
  if (starts_with(name, "symplectic:")) return symplectic(parameter(name, "symplectic:", 1));
  if (starts_with(name, "symplectic-")) {
    const long dim = parameter(name, "symplectic-", 2);
    if (dim % 2 != 0) throw ValidationError("example '" + name + "': symplectic dimension must be even");
    Json j = symplectic(dim / 2);
    j["name"] = name;
    return j;
  }
  if (starts_with(name, "cyclic-quotient:")) {
    const long n = parameter(name, "cyclic-quotient:", 2);
    Json j = symplectic(1);
    j["name"] = name;
    j["variables"] = {"x", "y"};
    j["field"] = {{"cyclotomic", n}};
    j["group"] = {{"generators", Json::array({Json::array({Json::array({"zeta", "0"}), Json::array({"0", "zeta^-1"})})})}};
    j["morphism"] = "invariants";
    return j;
  }
  if (starts_with(name, "klein-d:")) {
    const long n = parameter(name, "klein-d:", 4);
    const int a = static_cast<int>(2 * (n - 2)), c = static_cast<int>(2 * (n - 1));
    return jac("x^2*y + y^" + std::to_string(n - 1) + " + z^2", {a, 4, c}, 4 * (n - 1));
  }
  if (name == "klein-e:6") return jac("x^3 + y^4 + z^2", {8, 6, 12}, 24);
  if (name == "klein-e:7") return jac("x^3 + x*y^3 + z^2", {12, 8, 18}, 36);
  if (name == "klein-e:8") return jac("x^3 + y^5 + z^2", {20, 12, 30}, 60);
  if (name == "zero-plane") {
    Json j;
    j["name"] = name;
    j["field"] = "Q";
    j["variables"] = {"x", "y"};
    j["weights"] = {1, 1};
    j["ideal"] = Json::array();
    j["bracket"] = {{"matrix", Json::array({Json::array({"0"}), Json::array()})}};
    j["degree_shift"] = 0;
    return j;
  }
  std::string known;
  for (const auto& n : example_names()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown example '" + name + "'; available: " + known);
}

Document example(const std::string& name) { return parse_document(example_json(name)); }

}  // namespace ptrace
