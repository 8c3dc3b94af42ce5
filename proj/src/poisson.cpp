#include "ptrace/poisson.hpp"

#include "ptrace/errors.hpp"

namespace ptrace {

namespace {

std::string entry_name(const Ring& r, std::size_t i, std::size_t j) {
  return "{" + r.names()[i] + ", " + r.names()[j] + "}";
}

}  // namespace

PoissonPresentation::PoissonPresentation(RingPtr ring, std::vector<Poly> ideal, std::vector<std::vector<Poly>> matrix,
                                         std::optional<long> degree_shift, int field_order)
    : ring_(std::move(ring)), ideal_(std::move(ideal)), pi_(std::move(matrix)), d_(degree_shift),
      field_order_(field_order) {
  const std::size_t n = ring_->nvars();
  if (pi_.size() != n) throw ValidationError("structure matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (auto& row : pi_) {
    if (row.size() != n) throw ValidationError("structure matrix must be square");
    for (auto& e : row) e = e.in_ring(ring_);
  }
  for (auto& g : ideal_) g = g.in_ring(ring_);
  // Zero generators carry no information.
  std::erase_if(ideal_, [](const Poly& g) { return g.is_zero(); });

  for (std::size_t i = 0; i < n; ++i) {
    if (!pi_[i][i].is_zero()) throw ValidationError("structure matrix diagonal must vanish at " + entry_name(*ring_, i, i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (pi_[i][j] != -pi_[j][i]) throw ValidationError("structure matrix is not antisymmetric at " + entry_name(*ring_, i, j));
  }
  if (d_) {
    const Weights& w = ring_->weights();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Poly& e = pi_[i][j];
        if (e.is_zero()) continue;
        const long want = w[i] + w[j] - *d_;
        if (e.homogeneous_degree() != want)
          throw ValidationError(entry_name(*ring_, i, j) + " = " + e.to_string() + " is not homogeneous of degree " +
                                std::to_string(want));
      }
    for (const auto& g : ideal_)
      if (!g.is_homogeneous()) throw ValidationError("ideal generator " + g.to_string() + " is not homogeneous");
  }
  gb_ = std::make_shared<const GroebnerBasis>(buchberger(Ideal(ring_, ideal_)));
}

bool operator==(const PoissonPresentation& a, const PoissonPresentation& b) {
  return *a.ring_ == *b.ring_ && a.ideal_ == b.ideal_ && a.pi_ == b.pi_ && a.d_ == b.d_ &&
         a.field_order_ == b.field_order_;
}

Poly apply_field(const std::vector<Poly>& field, const Poly& g) {
  Poly out(g.ring());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i].is_zero()) continue;
    Poly dg = g.derivative(i);
    if (!dg.is_zero()) out += field[i] * dg;
  }
  return out;
}

std::vector<Poly> hamiltonian_field(const PoissonPresentation& P, const Poly& f) {
  const std::size_t n = P.nvars();
  std::vector<Poly> df;
  for (std::size_t k = 0; k < n; ++k) df.push_back(f.derivative(k));
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n; ++i) {
    Poly c(P.ring());
    for (std::size_t k = 0; k < n; ++k)
      if (!df[k].is_zero() && !P.entry(k, i).is_zero()) c += df[k] * P.entry(k, i);
    out.push_back(P.gb().normal_form(c));
  }
  return out;
}

Poly bracket(const PoissonPresentation& P, const Poly& f, const Poly& g) {
  return P.gb().normal_form(apply_field(hamiltonian_field(P, f), g.in_ring(P.ring())));
}

PoissonPresentation jacobian_surface_bracket(const Poly& F, int field_order) {
  const RingPtr& r = F.ring();
  if (r->nvars() != 3) throw ValidationError("jacobian bracket needs exactly 3 variables");
  if (F.is_zero()) throw ValidationError("jacobian bracket needs F != 0");
  const auto deg = F.homogeneous_degree();
  if (!deg) throw ValidationError(F.to_string() + " is not weighted homogeneous");
  const Weights& w = r->weights();
  const long d = w[0] + w[1] + w[2] - *deg;
  const Poly Fx = F.derivative(0), Fy = F.derivative(1), Fz = F.derivative(2);
  const Poly zero(r);
  std::vector<std::vector<Poly>> pi = {{zero, Fz, -Fy}, {-Fz, zero, Fx}, {Fy, -Fx, zero}};
  PoissonPresentation P(r, {F}, std::move(pi), d, field_order);
  P.set_jacobian_of(F);
  return P;
}

PoissonPresentation symplectic_presentation(std::size_t pairs) {
  if (pairs == 0) throw ValidationError("symplectic presentation needs at least one pair");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= pairs; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  auto r = make_ring(names, std::vector<int>(2 * pairs, 1));
  std::vector<std::vector<Poly>> pi(2 * pairs, std::vector<Poly>(2 * pairs, Poly(r)));
  for (std::size_t i = 0; i < pairs; ++i) {
    pi[2 * i][2 * i + 1] = Poly(r, Scalar(1));
    pi[2 * i + 1][2 * i] = Poly(r, Scalar(-1));
  }
  return PoissonPresentation(r, {}, std::move(pi), 2);
}

JacobiResult jacobi_check(const PoissonPresentation& P) {
  const std::size_t n = P.nvars();
  std::vector<std::vector<Poly>> fields;
  for (std::size_t i = 0; i < n; ++i) fields.push_back(hamiltonian_field(P, Poly::variable(P.ring(), i)));
  auto br = [&](std::size_t i, const Poly& g) { return apply_field(fields[i], g); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Poly s = br(i, P.entry(j, k)) + br(j, P.entry(k, i)) + br(k, P.entry(i, j));
        Poly r = P.gb().normal_form(s);
        if (!r.is_zero()) return {false, {i, j, k}, r};
      }
  return {};
}

IdealCheckResult poisson_ideal_check(const PoissonPresentation& P) {
  for (std::size_t i = 0; i < P.nvars(); ++i) {
    auto field = hamiltonian_field(P, Poly::variable(P.ring(), i));
    for (std::size_t k = 0; k < P.ideal_generators().size(); ++k) {
      Poly r = P.gb().normal_form(apply_field(field, P.ideal_generators()[k]));
      if (!r.is_zero()) return {false, i, k, r};
    }
  }
  return {};
}

void verify_poisson(const PoissonPresentation& P) {
  const auto& names = P.ring()->names();
  if (auto j = jacobi_check(P); !j.ok)
    throw ValidationError("Jacobi identity fails for (" + names[j.triple[0]] + ", " + names[j.triple[1]] + ", " +
                          names[j.triple[2]] + "): jacobiator " + j.jacobiator.to_string());
  if (auto c = poisson_ideal_check(P); !c.ok)
    throw ValidationError("ideal is not Poisson: {" + names[c.variable] + ", " + P.ideal_generators()[c.generator].to_string() +
                          "} = " + c.remainder.to_string() + " mod I");
}

PoissonPresentation rescale(const PoissonPresentation& P, const Scalar& c) {
  if (c.is_zero()) throw ValidationError("rescaling factor must be nonzero");
  auto pi = P.matrix();
  for (auto& row : pi)
    for (auto& e : row) e = c * e;
  PoissonPresentation out(P.ring(), P.ideal_generators(), std::move(pi), P.degree_shift(), P.field_order());
  if (P.jacobian_of()) out.set_jacobian_of(*P.jacobian_of());
  return out;
}

PoissonPresentation direct_sum(const PoissonPresentation& a, const PoissonPresentation& b) {
  std::vector<std::string> names = a.ring()->names();
  for (const auto& s : b.ring()->names()) names.push_back(s);
  std::vector<int> w = a.ring()->weights().values();
  for (int v : b.ring()->weights().values()) w.push_back(v);
  auto r = make_ring(names, w);  // rejects clashing names

  const std::size_t na = a.nvars(), n = names.size();
  std::vector<Poly> ya, yb;
  for (std::size_t i = 0; i < na; ++i) ya.push_back(Poly::variable(r, i));
  for (std::size_t i = na; i < n; ++i) yb.push_back(Poly::variable(r, i));

  std::vector<std::vector<Poly>> pi(n, std::vector<Poly>(n, Poly(r)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) pi[i][j] = a.entry(i, j).substitute(ya);
  for (std::size_t i = na; i < n; ++i)
    for (std::size_t j = na; j < n; ++j) pi[i][j] = b.entry(i - na, j - na).substitute(yb);
  std::vector<Poly> ideal;
  for (const auto& g : a.ideal_generators()) ideal.push_back(g.substitute(ya));
  for (const auto& g : b.ideal_generators()) ideal.push_back(g.substitute(yb));
  std::optional<long> d;
  if (a.degree_shift() && a.degree_shift() == b.degree_shift()) d = a.degree_shift();
  return PoissonPresentation(r, std::move(ideal), std::move(pi), d, std::max(a.field_order(), b.field_order()));
}

MorphismPresentation::MorphismPresentation(PresentationPtr source, std::vector<Poly> images) : source_(std::move(source)) {
  for (auto& f : images) {
    Poly g = source_->gb().normal_form(f.in_ring(source_->ring()));
    if (g.is_zero()) continue;
    if (source_->is_graded()) {
      auto deg = g.homogeneous_degree();
      if (!deg) throw ValidationError("morphism image " + f.to_string() + " is not homogeneous");
      degrees_.push_back(*deg);
    }
    images_.push_back(std::move(g));
  }
}

MorphismPresentation MorphismPresentation::identity(PresentationPtr source) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < source->nvars(); ++i) vars.push_back(Poly::variable(source->ring(), i));
  return MorphismPresentation(std::move(source), std::move(vars));
}

}  // namespace ptrace
