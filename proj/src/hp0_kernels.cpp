#include "ptrace/hp0_kernels.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <unordered_map>

#include "ptrace/errors.hpp"

namespace ptrace {

namespace {

using ColumnIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

struct Task {
  long m;            // target degree
  std::size_t j;     // mover index, or monomial index for Reynolds tasks
  Monomial source;
};

// xi(s) for a monomial s: sum_i field_i * d_i s.
Poly apply_to_monomial(const std::vector<Poly>& field, const RingPtr& ring, const Monomial& s) {
  Poly out(ring);
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (s[i] == 0 || field[i].is_zero()) continue;
    Monomial e(s.size());
    e.set(i, 1);
    out += field[i].mul_term(s / e, Scalar(static_cast<long>(s[i])));
  }
  return out;
}

SparseRow coordinates(const Poly& p, const ColumnIndex& cols) {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto it = cols.find(t.mono);
    if (it == cols.end()) throw std::logic_error("trace_space_dims: image left the target degree");
    row.emplace_back(it->second, t.coeff);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

// Runs body(i) for i in [0, n), in parallel when asked; the first exception is rethrown.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(ptrace_kernel_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::size_t dense_rank(const std::vector<const SparseRow*>& rows, std::size_t cols) {
  DenseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : *rows[i]) m(i, c) = v;
  return m.rank();
}

}  // namespace

TraceDims trace_space_dims(const PoissonPresentation& P, const std::vector<Mover>& movers, long max_degree,
                           const FiniteMatrixGroup* group, Execution exec, const Budget& budget) {
  if (!P.is_graded()) throw ValidationError("presentation is not graded (degree_shift is null)");
  if (max_degree < 0) throw ValidationError("max degree must be nonnegative");
  const long d = *P.degree_shift();
  const GroebnerBasis& gb = P.gb();
  const RingPtr& ring = P.ring();

  // Standard monomials of every degree that occurs as a source or a target.
  std::map<long, std::vector<Monomial>> standard;
  auto need = [&](long deg) {
    if (deg >= 0 && !standard.count(deg)) standard.emplace(deg, gb.standard_monomials(deg));
  };
  for (long m = 0; m <= max_degree; ++m) {
    need(m);
    for (const auto& mv : movers) need(m + d - mv.degree);
  }
  std::map<long, ColumnIndex> columns;
  for (long m = 0; m <= max_degree; ++m) {
    auto& idx = columns[m];
    const auto& monos = standard.at(m);
    for (std::size_t k = 0; k < monos.size(); ++k) idx.emplace(monos[k], k);
  }

  std::vector<std::vector<Poly>> fields(movers.size());
  for_each_index(movers.size(), exec, [&](std::size_t j) { fields[j] = hamiltonian_field(P, movers[j].f); });

  std::vector<Task> tasks;
  for (long m = 0; m <= max_degree; ++m)
    for (std::size_t j = 0; j < movers.size(); ++j) {
      const long src = m + d - movers[j].degree;
      if (src < 0) continue;
      for (const auto& s : standard.at(src)) tasks.push_back({m, j, s});
    }
  std::vector<SparseRow> rows(tasks.size());
  for_each_index(tasks.size(), exec, [&](std::size_t t) {
    budget.charge();
    const Task& task = tasks[t];
    Poly image = gb.normal_form(apply_to_monomial(fields[task.j], ring, task.source), budget);
    rows[t] = coordinates(image, columns.at(task.m));
  });

  std::vector<Task> averaging;
  std::vector<SparseRow> averaged;
  if (group) {
    if (group->dim() != P.nvars()) throw ValidationError("group dimension does not match the number of variables");
    for (long m = 0; m <= max_degree; ++m)
      for (const auto& s : standard.at(m)) averaging.push_back({m, 0, s});
    averaged.resize(averaging.size());
    for_each_index(averaging.size(), exec, [&](std::size_t t) {
      budget.charge(group->order());
      const Task& task = averaging[t];
      Poly r = gb.normal_form(reynolds(*group, Poly::monomial(ring, task.source)), budget);
      averaged[t] = coordinates(r, columns.at(task.m));
    });
  }

  const std::size_t degrees = static_cast<std::size_t>(max_degree) + 1;
  TraceDims out;
  out.per_degree.assign(degrees, 0);
  if (group) out.invariant_per_degree.assign(degrees, 0);

  // Row lists per degree; task order is deterministic so the result is too.
  std::vector<std::vector<const SparseRow*>> span_rows(degrees), avg_rows(degrees);
  for (std::size_t t = 0; t < tasks.size(); ++t) span_rows[tasks[t].m].push_back(&rows[t]);
  for (std::size_t t = 0; t < averaging.size(); ++t) avg_rows[averaging[t].m].push_back(&averaged[t]);

  for_each_index(degrees, exec, [&](std::size_t m) {
    const std::size_t cols = standard.at(static_cast<long>(m)).size();
    if (exec == Execution::Serial) {
      const std::size_t rank = dense_rank(span_rows[m], cols);
      out.per_degree[m] = cols - rank;
      if (group) {
        auto all = span_rows[m];
        all.insert(all.end(), avg_rows[m].begin(), avg_rows[m].end());
        out.invariant_per_degree[m] = dense_rank(all, cols) - rank;
      }
      return;
    }
    RowEchelon echelon(cols);
    for (const auto* r : span_rows[m])
      if (!r->empty()) echelon.insert(*r);
    out.per_degree[m] = cols - echelon.rank();
    if (group) {
      std::size_t extra = 0;
      for (const auto* r : avg_rows[m])
        if (!r->empty() && echelon.insert(*r)) ++extra;
      out.invariant_per_degree[m] = extra;
    }
  });
  return out;
}

}  // namespace ptrace
