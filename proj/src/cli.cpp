#include "ptrace/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ptrace/catalog.hpp"
#include "ptrace/errors.hpp"
#include "ptrace/parse.hpp"

namespace ptrace::cli {

namespace {

struct JobSpec {
  std::string command;
  std::string example;
  std::string input;
  std::string output = "json";
  std::string out_path;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  long max_degree = -1;
  std::size_t samples = 5;
  long range = kDefaultCovectorRange;
  std::string execution = "parallel";
  // free-standing ideal / polynomial input
  std::string F;
  std::string ideal;
  std::string vars;
  std::string weights;
  std::string order = "grevlex";
  std::string name;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  for (auto& part : split_top_level(s, ',')) {
    std::string t;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::vector<int> parse_weights(const std::string& s, std::size_t n) {
  if (s.empty()) return std::vector<int>(n, 1);
  std::vector<int> w;
  for (const auto& t : split_names(s)) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw ParseError("bad weight '" + t + "'", t);
    }
  }
  if (w.size() != n) throw ValidationError("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
  return w;
}

// Variable names for free-standing input: explicit, else x,y,z for three, else x1..xn.
std::vector<std::string> default_vars(const JobSpec& job, std::size_t n_hint) {
  if (!job.vars.empty()) return split_names(job.vars);
  if (n_hint == 3) return {"x", "y", "z"};
  if (n_hint == 2) return {"x", "y"};
  if (n_hint == 1) return {"x"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n_hint; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

Document load(const JobSpec& job) {
  if (!job.example.empty() && !job.input.empty()) throw ValidationError("use either --example or --input, not both");
  if (!job.example.empty()) return example(job.example);
  if (!job.input.empty()) return load_document(job.input);
  throw ValidationError("this command needs --example NAME or --input FILE");
}

Execution execution_of(const JobSpec& job) {
  if (job.execution == "parallel") return Execution::Parallel;
  if (job.execution == "serial") return Execution::Serial;
  throw ValidationError("unknown execution mode '" + job.execution + "'");
}

long max_degree_of(const JobSpec& job, const PoissonPresentation& P) {
  return job.max_degree >= 0 ? job.max_degree : default_max_degree(P);
}

MonomialOrder order_of(const JobSpec& job) {
  if (job.order == "grevlex") return MonomialOrder::grevlex();
  if (job.order == "lex") return MonomialOrder::lex();
  throw ValidationError("unknown monomial order '" + job.order + "'");
}

// Ideal from --ideal/--vars/--weights, or from the presentation given by --example/--input.
Ideal ideal_of(const JobSpec& job) {
  if (job.ideal.empty()) {
    Document d = load(job);
    const auto& P = *d.presentation;
    auto ring = make_ring(P.ring()->names(), P.ring()->weights().values(), order_of(job));
    std::vector<Poly> gens;
    for (const auto& g : P.ideal_generators()) gens.push_back(g.in_ring(ring));
    return Ideal(ring, gens);
  }
  const auto parts = split_top_level(job.ideal, ',');
  auto names = default_vars(job, job.weights.empty() ? 3 : split_names(job.weights).size());
  auto ring = make_ring(names, parse_weights(job.weights, names.size()), order_of(job));
  std::vector<Poly> gens;
  for (const auto& p : parts) {
    Poly g = parse_poly(p, ring);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return Ideal(ring, gens);
}

Json codim_value(const Codimension& c) { return c ? Json(*c) : Json("infinite"); }

Json run_command(const JobSpec& job, const Budget& budget) {
  const std::string& cmd = job.command;
  if (cmd == "examples") {
    if (job.name.empty()) return Json{{"examples", example_names()}};
    return to_json(example(job.name));
  }
  if (cmd == "milnor") {
    if (job.F.empty()) throw ValidationError("milnor needs --F");
    const auto w_names = split_names(job.weights);
    auto names = default_vars(job, job.weights.empty() ? 3 : w_names.size());
    auto ring = make_ring(names, parse_weights(job.weights, names.size()));
    Poly F = parse_poly(job.F, ring);
    Json j;
    j["F"] = F.to_string();
    j["weights"] = ring->weights().values();
    j["milnor"] = codim_value(milnor_number(F));
    return j;
  }
  if (cmd == "groebner") return to_json(buchberger(ideal_of(job), budget));
  if (cmd == "codim") return Json{{"codimension", codim_value(codimension(ideal_of(job), budget))}};
  if (cmd == "dim") {
    auto d = krull_dimension(ideal_of(job), budget);
    return Json{{"krull_dimension", d ? Json(*d) : Json("empty")}};
  }
  if (cmd == "hilbert") {
    const long up_to = job.max_degree >= 0 ? job.max_degree : 10;
    return Json{{"hilbert", hilbert_function(ideal_of(job), up_to, budget)}};
  }

  Document doc = load(job);
  const PoissonPresentation& P = *doc.presentation;
  const Execution exec = execution_of(job);

  if (cmd == "hp0") return to_json(hp0_absolute(P, max_degree_of(job, P), exec, budget), job.seed);
  if (cmd == "hp0-rel") return to_json(hp0_relative(morphism_of(doc, budget), max_degree_of(job, P), exec, budget), job.seed);
  if (cmd == "bound") {
    Json j = to_json(jp_bound(morphism_of(doc, budget), job.samples, job.seed, job.range, budget.limit()));
    j["seed"] = job.seed;
    return j;
  }
  if (cmd == "certify") {
    auto M = morphism_of(doc, budget);
    const long top = max_degree_of(job, P);
    HP0Report r = doc.morphism == MorphismKind::Identity ? hp0_absolute(P, top, exec, budget) : hp0_relative(M, top, exec, budget);
    r = certify(std::move(r), jp_bound(M, job.samples, job.seed, job.range, budget.limit()));
    Json j = to_json(r, job.seed);
    auto rb = rep_bound(r);
    j["rep_bound"] = rb ? Json(*rb) : Json("unknown");
    return j;
  }
  if (cmd == "leaves") return to_json(rank_stratification(P, budget));
  if (cmd == "holonomy") return to_json(singular_support(morphism_of(doc, budget), budget));
  if (cmd == "quotient") {
    if (!doc.group) throw ValidationError("quotient needs a presentation with a group");
    MorphismPresentation M = doc.morphism == MorphismKind::Identity
                                 ? MorphismPresentation(doc.presentation, invariant_generators(*doc.group, P.ring(), budget))
                                 : morphism_of(doc, budget);
    const long top = max_degree_of(job, P);
    HP0Report r = hp0_equivariant(M, *doc.group, top, exec, budget);
    r = certify(std::move(r), jp_bound(M, job.samples, job.seed, job.range, budget.limit()));
    Json j = to_json(r, job.seed);
    Json gens = Json::array();
    for (const auto& f : M.images()) gens.push_back(f.to_string());
    j["invariant_generators"] = gens;
    // H(K) needs a symplectic vector space: no ideal, constant nondegenerate bracket.
    bool symplectic = P.ideal_generators().empty();
    for (std::size_t i = 0; symplectic && i < P.nvars(); ++i)
      for (std::size_t k = 0; k < P.nvars(); ++k) symplectic = symplectic && P.entry(i, k).is_constant();
    if (symplectic) symplectic = !constant_matrix(P).determinant().is_zero();
    if (symplectic) {
      const DenseMatrix omega = constant_matrix(P).inverse();
      Json par = Json::array();
      for (const auto& K : parabolic_subgroups(*doc.group, omega)) {
        HP0Report h = h_of_k(*doc.group, omega, K, top, exec, budget);
        Json o;
        o["order"] = K.elements.size();
        o["fixed_dim"] = K.fixed_basis.cols();
        o["normalizer_quotient_order"] = K.quotient_order;
        o["H_total"] = h.total;
        o["H_invariant_total"] = *h.invariant_total;
        par.push_back(o);
      }
      j["parabolic"] = par;
    }
    return j;
  }
  throw ValidationError("unknown command '" + cmd + "'");
}

void add_document_options(CLI::App* sub, JobSpec& job) {
  sub->add_option("--example", job.example, "built-in example name (see `examples`)");
  sub->add_option("--input", job.input, "presentation JSON file");
}

void add_computation_options(CLI::App* sub, JobSpec& job) {
  sub->add_option("--max-degree", job.max_degree, "degree cutoff M (default: from the presentation)");
  sub->add_option("--execution", job.execution, "parallel | serial");
}

void add_bound_options(CLI::App* sub, JobSpec& job) {
  sub->add_option("--samples", job.samples, "number of covector samples")->capture_default_str();
  sub->add_option("--range", job.range, "covector entries lie in [-B, B] \\ {0}")->capture_default_str();
}

void add_ideal_options(CLI::App* sub, JobSpec& job) {
  add_document_options(sub, job);
  sub->add_option("--ideal", job.ideal, "comma-separated generators");
  sub->add_option("--vars", job.vars, "comma-separated variable names");
  sub->add_option("--weights", job.weights, "comma-separated positive weights");
  sub->add_option("--order", job.order, "grevlex | lex")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  CLI::App app{"ptrace: Poisson trace spaces HP0 of graded Poisson varieties", "ptrace"};
  app.require_subcommand(1);
  app.add_option("--output", job.output, "json | text")->capture_default_str();
  app.add_option("--out", job.out_path, "write the report to this file instead of stdout");
  app.add_option("--seed", job.seed, "first covector seed")->capture_default_str();
  app.add_option("--budget", job.budget, "step budget, 0 = unlimited")->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"hp0", "degreewise dimensions of A/{A,A}"},
      {"hp0-rel", "degreewise dimensions of O_X/{O_Y,O_X}"},
      {"bound", "codimension bound from J_p samples"},
      {"certify", "HP0 together with the J_p bound"},
      {"leaves", "rank stratification of the bracket"},
      {"holonomy", "dimension of the singular support variety Z"},
      {"milnor", "Milnor number of --F"},
      {"quotient", "invariant part of O_V/{O_V^G, O_V}"},
      {"groebner", "reduced Groebner basis"},
      {"codim", "vector-space codimension of an ideal"},
      {"dim", "Krull dimension of an ideal"},
      {"hilbert", "Hilbert function of a homogeneous ideal"},
      {"examples", "list or print built-in presentations"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    // Global flags are also accepted after the subcommand.
    sub->fallthrough();
    const std::string name = s.name;
    if (name == "milnor") {
      sub->add_option("--F", job.F, "polynomial")->required();
      sub->add_option("--weights", job.weights, "comma-separated weights");
      sub->add_option("--vars", job.vars, "comma-separated variable names");
    } else if (name == "groebner" || name == "codim" || name == "dim" || name == "hilbert") {
      add_ideal_options(sub, job);
      if (name == "hilbert") sub->add_option("--max-degree", job.max_degree, "last degree (default 10)");
    } else if (name == "examples") {
      sub->add_option("name", job.name, "example to print");
    } else {
      add_document_options(sub, job);
      add_computation_options(sub, job);
      if (name == "bound" || name == "certify" || name == "quotient") add_bound_options(sub, job);
    }
    sub->callback([&job, name] { job.command = name; });
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 takes reversed vectors
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (job.output != "json" && job.output != "text") throw ValidationError("--output must be json or text");
    const Budget budget(job.budget);
    Json report = run_command(job, budget);
    const std::string text = job.output == "json" ? report.dump(2) + "\n" : render_text(report);
    if (job.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(job.out_path);
      if (!f) throw ValidationError("cannot write " + job.out_path);
      f << text;
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace ptrace::cli
