#include "ptrace/group.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <unordered_map>

#include "ptrace/errors.hpp"

namespace ptrace {

namespace {

std::string key_of(const DenseMatrix& m) {
  std::string k = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k += m(i, j).to_string() + ";";
  return k;
}

DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

// Nonzero rows of the reduced row echelon form: a canonical equation set.
DenseMatrix canonical_rows(const DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  DenseMatrix r = m.rref(&pivots);
  DenseMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
  return out;
}

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<DenseMatrix> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw ValidationError("a group needs at least the identity");
  const std::size_t n = elems_[0].rows();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].rows() != n || elems_[i].cols() != n) throw ValidationError("group elements must be square of equal size");
    if (!index.emplace(key_of(elems_[i]), i).second) throw ValidationError("repeated group element");
  }
  auto id = index.find(key_of(DenseMatrix::identity(n)));
  if (id == index.end()) throw ValidationError("group does not contain the identity");
  identity_ = id->second;

  const std::size_t N = elems_.size();
  table_.resize(N * N);
  inverse_.assign(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      auto it = index.find(key_of(elems_[a] * elems_[b]));
      if (it == index.end()) throw ValidationError("element list is not closed under multiplication");
      table_[a * N + b] = it->second;
      if (it->second == identity_) inverse_[a] = b;
    }
  for (std::size_t a = 0; a < N; ++a)
    if (inverse_[a] == N) throw ValidationError("element list is not closed under inverses");
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const DenseMatrix& g) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == g) return i;
  return std::nullopt;
}

FiniteMatrixGroup close_group(const std::vector<DenseMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw ValidationError("close_group needs at least one generator");
  const std::size_t n = generators[0].rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw ValidationError("generators must be square of equal size");
    if (g.determinant().is_zero()) throw ValidationError("generator is not invertible");
  }
  std::vector<DenseMatrix> elems{DenseMatrix::identity(n)};
  std::unordered_map<std::string, std::size_t> seen{{key_of(elems[0]), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      DenseMatrix h = elems[head] * g;
      if (seen.emplace(key_of(h), elems.size()).second) {
        elems.push_back(std::move(h));
        if (elems.size() > cap) throw ValidationError("group too large or infinite (more than " + std::to_string(cap) + " elements)");
      }
    }
  }
  return FiniteMatrixGroup(std::move(elems));
}

bool preserves_form(const FiniteMatrixGroup& G, const DenseMatrix& omega) {
  return std::all_of(G.elements().begin(), G.elements().end(),
                     [&](const DenseMatrix& g) { return g.transpose() * omega * g == omega; });
}

Poly act(const DenseMatrix& g, const Poly& f) {
  const RingPtr& r = f.ring();
  const std::size_t n = r->nvars();
  if (g.rows() != n) throw ValidationError("group dimension does not match the number of variables");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> t;
    for (std::size_t k = 0; k < n; ++k)
      if (!g(i, k).is_zero()) {
        Monomial m(n);
        m.set(k, 1);
        t.push_back({m, g(i, k)});
      }
    images.push_back(Poly::from_terms(r, std::move(t)));
  }
  return f.substitute(images);
}

Poly reynolds(const FiniteMatrixGroup& G, const Poly& f) {
  Poly sum(f.ring());
  for (const auto& g : G.elements()) sum += act(g, f);
  return Scalar::fraction(1, static_cast<long>(G.order())) * sum;
}

bool preserves_presentation(const FiniteMatrixGroup& G, const PoissonPresentation& P) {
  if (G.dim() != P.nvars()) return false;
  const std::size_t n = P.nvars();
  for (const auto& g : G.elements()) {
    for (const auto& h : P.ideal_generators())
      if (!P.gb().normal_form(act(g, h)).is_zero()) return false;
    std::vector<Poly> moved;
    for (std::size_t i = 0; i < n; ++i) moved.push_back(act(g, Poly::variable(P.ring(), i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (bracket(P, moved[i], moved[j]) != P.gb().normal_form(act(g, P.entry(i, j)))) return false;
  }
  return true;
}

std::vector<Poly> invariant_generators(const FiniteMatrixGroup& G, const RingPtr& ring, const Budget& budget) {
  const std::size_t n = ring->nvars();
  if (G.dim() != n) throw ValidationError("group dimension does not match the number of variables");
  const Weights standard = Weights::standard(n);
  const long top = static_cast<long>(G.order());

  std::vector<Poly> gens;
  std::vector<long> gen_degree;
  // basis[t]: a basis of the degree-t part of the subalgebra generated so far.
  std::vector<std::vector<Poly>> basis(top + 1);
  basis[0].push_back(Poly(ring, Scalar(1)));

  for (long t = 1; t <= top; ++t) {
    const auto monos = monomial_basis(standard, t, ring->order());
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);
    auto row_of = [&](const Poly& p) {
      SparseRow row;
      for (const auto& term : p.terms()) row.emplace_back(col.at(term.mono), term.coeff);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return row;
    };

    RowEchelon span(monos.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const long rest = t - gen_degree[k];
      if (rest < 0) continue;
      for (const auto& b : basis[rest]) {
        Poly p = gens[k] * b;
        if (span.insert(row_of(p))) basis[t].push_back(std::move(p));
      }
    }

    std::vector<Poly> averaged(monos.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < monos.size(); ++i) {
      try {
        budget.charge(G.order());
        averaged[i] = reynolds(G, Poly::monomial(ring, monos[i]));
      } catch (...) {
#pragma omp critical(ptrace_invariant_error)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& r : averaged) {
      if (r.is_zero()) continue;
      if (span.insert(row_of(r))) {
        Poly g = r.monic();
        basis[t].push_back(g);
        gens.push_back(std::move(g));
        gen_degree.push_back(t);
      }
    }
  }
  return gens;
}

DenseMatrix constant_matrix(const PoissonPresentation& P) {
  const std::size_t n = P.nvars();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& e = P.entry(i, j);
      if (!e.is_constant()) throw ValidationError("structure matrix is not constant");
      if (!e.is_zero()) m(i, j) = e.leading_coefficient();
    }
  return m;
}

std::vector<ParabolicDatum> parabolic_subgroups(const FiniteMatrixGroup& G, const std::optional<DenseMatrix>& omega) {
  const std::size_t n = G.dim();
  const DenseMatrix I = DenseMatrix::identity(n);
  std::vector<DenseMatrix> moved;  // g - I
  for (const auto& g : G.elements()) moved.push_back(g - I);

  // Intersection closure of the element fixed spaces, each stored by its canonical equations.
  std::map<std::string, DenseMatrix> spaces;
  std::deque<DenseMatrix> todo{DenseMatrix(0, n)};
  spaces.emplace(key_of(todo.front()), todo.front());
  while (!todo.empty()) {
    DenseMatrix eq = std::move(todo.front());
    todo.pop_front();
    for (const auto& m : moved) {
      DenseMatrix next = canonical_rows(vstack(eq, m));
      if (spaces.emplace(key_of(next), next).second) todo.push_back(std::move(next));
    }
  }

  std::map<std::vector<std::size_t>, ParabolicDatum> found;
  for (const auto& [key, eq] : spaces) {
    ParabolicDatum pd;
    pd.fixed_basis = eq.rows() == 0 ? DenseMatrix::identity(n) : eq.nullspace();
    for (std::size_t i = 0; i < G.order(); ++i)
      if ((moved[i] * pd.fixed_basis).rank() == 0) pd.elements.push_back(i);
    if (found.count(pd.elements)) continue;
    if (omega) {
      DenseMatrix rows = pd.fixed_basis.transpose() * *omega;
      pd.complement = rows.rows() == 0 ? DenseMatrix::identity(n) : rows.nullspace();
    }
    std::vector<bool> in_k(G.order(), false);
    for (auto k : pd.elements) in_k[k] = true;
    for (std::size_t g = 0; g < G.order(); ++g) {
      bool normal = true;
      for (auto k : pd.elements)
        if (!in_k[G.product(G.product(g, k), G.inverse(g))]) {
          normal = false;
          break;
        }
      if (normal) pd.normalizer.push_back(g);
    }
    pd.quotient_order = pd.normalizer.size() / pd.elements.size();
    found.emplace(pd.elements, std::move(pd));
  }

  std::vector<ParabolicDatum> out;
  for (auto& [k, pd] : found) out.push_back(std::move(pd));
  std::stable_sort(out.begin(), out.end(), [](const ParabolicDatum& a, const ParabolicDatum& b) {
    return a.elements.size() < b.elements.size();
  });
  return out;
}

}  // namespace ptrace
