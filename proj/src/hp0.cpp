#include "ptrace/hp0.hpp"

#include <random>

#include "ptrace/errors.hpp"

namespace ptrace {

std::string to_string(Status s) {
  switch (s) {
    case Status::CertifiedComplete:
      return "CERTIFIED-COMPLETE";
    case Status::BoundNotMet:
      return "BOUND-NOT-MET";
    case Status::NoBound:
      return "NO-BOUND";
  }
  return "NO-BOUND";
}

namespace {

std::size_t sum(const std::vector<std::size_t>& v) {
  std::size_t s = 0;
  for (auto x : v) s += x;
  return s;
}

HP0Report make_report(TraceDims dims, long max_degree, bool with_invariants) {
  HP0Report r;
  r.per_degree = std::move(dims.per_degree);
  r.total = sum(r.per_degree);
  r.max_degree = max_degree;
  if (with_invariants) {
    r.invariant_total = sum(dims.invariant_per_degree);
    r.invariant_per_degree = std::move(dims.invariant_per_degree);
  }
  return r;
}

std::vector<Mover> movers_of(const MorphismPresentation& M) {
  std::vector<Mover> out;
  for (std::size_t j = 0; j < M.images().size(); ++j) out.push_back({M.images()[j], M.degrees()[j]});
  return out;
}

void require_graded(const PoissonPresentation& P) {
  if (!P.is_graded())
    throw ValidationError("presentation is not graded (degree_shift is null); this computation needs a grading");
}

}  // namespace

HP0Report hp0_absolute(const PoissonPresentation& P, long max_degree, Execution exec, const Budget& budget) {
  require_graded(P);
  std::vector<Mover> movers;
  for (std::size_t i = 0; i < P.nvars(); ++i) movers.push_back({Poly::variable(P.ring(), i), P.ring()->weights()[i]});
  return make_report(trace_space_dims(P, movers, max_degree, nullptr, exec, budget), max_degree, false);
}

HP0Report hp0_relative(const MorphismPresentation& M, long max_degree, Execution exec, const Budget& budget) {
  require_graded(M.source());
  return make_report(trace_space_dims(M.source(), movers_of(M), max_degree, nullptr, exec, budget), max_degree, false);
}

HP0Report hp0_equivariant(const MorphismPresentation& M, const FiniteMatrixGroup& G, long max_degree, Execution exec,
                          const Budget& budget) {
  const PoissonPresentation& P = M.source();
  require_graded(P);
  if (!preserves_presentation(G, P)) throw ValidationError("group does not preserve the Poisson structure");
  for (const auto& f : M.images())
    for (const auto& g : G.elements())
      if (P.gb().normal_form(act(g, f)) != f)
        throw ValidationError("morphism image " + f.to_string() + " is not invariant");
  return make_report(trace_space_dims(P, movers_of(M), max_degree, &G, exec, budget), max_degree, true);
}

std::vector<long> sample_covector(std::uint64_t seed, std::size_t n, long range) {
  if (range < 1) throw ValidationError("covector range must be positive");
  std::mt19937_64 gen(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(2 * range);
  std::vector<long> p(n);
  for (auto& x : p) {
    // Explicit mapping rather than a distribution: identical on every standard library.
    const long v = static_cast<long>(gen() % span);
    x = v < range ? v - range : v - range + 1;
  }
  return p;
}

std::vector<Poly> jp_generators(const MorphismPresentation& M, const std::vector<long>& p) {
  const PoissonPresentation& P = M.source();
  if (p.size() != P.nvars()) throw ValidationError("covector length does not match the number of variables");
  std::vector<Poly> gens = P.ideal_generators();
  for (const auto& f : M.images()) {
    auto field = hamiltonian_field(P, f);
    Poly symbol(P.ring());
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!field[i].is_zero()) symbol += Scalar(p[i]) * field[i];
    if (!symbol.is_zero()) gens.push_back(std::move(symbol));
  }
  return gens;
}

BoundReport jp_bound(const MorphismPresentation& M, std::size_t samples, std::uint64_t seed, long range,
                     std::uint64_t step_limit) {
  const PoissonPresentation& P = M.source();
  require_graded(P);
  BoundReport rep;
  rep.samples.resize(samples);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < samples; ++i) {
    BoundSample& s = rep.samples[i];
    s.seed = seed + i;
    s.covector = sample_covector(s.seed, P.nvars(), range);
    try {
      Budget budget(step_limit);
      s.codim = codimension(Ideal(P.ring(), jp_generators(M, s.covector)), budget);
    } catch (const BudgetExceeded& e) {
      s.error = e.what();
    }
  }
  for (const auto& s : rep.samples)
    if (!s.error && s.codim && (!rep.best || *s.codim < *rep.best)) rep.best = *s.codim;
  return rep;
}

HP0Report certify(HP0Report report, const BoundReport& bound) {
  report.bound_computed = true;
  report.bound = bound.best;
  report.seeds.clear();
  for (const auto& s : bound.samples) report.seeds.push_back(s.seed);
  if (!bound.best)
    report.status = Status::NoBound;
  else
    report.status = report.total == *bound.best ? Status::CertifiedComplete : Status::BoundNotMet;
  return report;
}

Codimension milnor_number(const Poly& F) {
  if (F.is_zero()) throw ValidationError("milnor number of the zero polynomial");
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < F.ring()->nvars(); ++i) {
    Poly d = F.derivative(i);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  return codimension(Ideal(F.ring(), std::move(partials)));
}

HP0Report h_of_k(const FiniteMatrixGroup& G, const DenseMatrix& omega, const ParabolicDatum& K, long max_degree,
                 Execution exec, const Budget& budget) {
  if (!K.complement) throw ValidationError("parabolic datum has no symplectic complement");
  const DenseMatrix& U = *K.complement;
  const std::size_t r = U.cols();
  if (r == 0) {
    // Functions on a point.
    TraceDims dims;
    dims.per_degree.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    dims.per_degree[0] = 1;
    dims.invariant_per_degree = dims.per_degree;
    return make_report(std::move(dims), max_degree, true);
  }
  const DenseMatrix Ut = U.transpose();
  const DenseMatrix omega_w = Ut * omega * U;
  const DenseMatrix pi_w = omega_w.inverse();  // throws when W is not symplectic
  const DenseMatrix coords = pi_w * Ut * omega;  // w = U c  =>  c = coords w

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r; ++i) names.push_back("w" + std::to_string(i));
  auto ring = make_ring(names, std::vector<int>(r, 1));
  std::vector<std::vector<Poly>> pi(r, std::vector<Poly>(r, Poly(ring)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) pi[i][j] = Poly(ring, pi_w(i, j));
  auto P = std::make_shared<const PoissonPresentation>(ring, std::vector<Poly>{}, std::move(pi), 2);

  std::vector<DenseMatrix> restricted;
  for (auto k : K.elements) restricted.push_back(coords * G[k] * U);
  FiniteMatrixGroup KW(std::move(restricted));
  MorphismPresentation M(P, invariant_generators(KW, ring, budget));
  return hp0_equivariant(M, KW, max_degree, exec, budget);
}

std::optional<std::size_t> rep_bound(const HP0Report& report) {
  if (report.status != Status::CertifiedComplete) return std::nullopt;
  return report.total;
}

long default_max_degree(const PoissonPresentation& P) {
  if (const auto& F = P.jacobian_of()) {
    std::vector<Poly> partials;
    for (std::size_t i = 0; i < F->ring()->nvars(); ++i)
      if (auto d = F->derivative(i); !d.is_zero()) partials.push_back(std::move(d));
    GroebnerBasis gb = buchberger(Ideal(F->ring(), std::move(partials)));
    if (auto top = top_standard_degree(gb)) return 2 * *top;
  }
  return 12;
}

}  // namespace ptrace
