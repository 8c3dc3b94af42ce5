#pragma once

#include <vector>

#include "ptrace/group.hpp"
#include "ptrace/poisson.hpp"

namespace ptrace {

/// A function whose Hamiltonian field moves A_{m + d - degree} into A_m.
struct Mover {
  Poly f;
  long degree = 0;
};

enum class Execution {
  Parallel,  // OpenMP row construction, sparse incremental elimination
  Serial,    // single thread, dense Gaussian elimination
};

struct TraceDims {
  std::vector<std::size_t> per_degree;            // dim A_m / span
  std::vector<std::size_t> invariant_per_degree;  // filled when a group is given
};

/// For m = 0..max_degree: dim of A_m modulo sum_j xi_{f_j}(A_{m + d - deg f_j}),
/// in standard-monomial coordinates for the Groebner basis of I_X. With a
/// group, also the dimension of the invariants of that quotient, computed as
/// rank(span + Reynolds(A_m)) - rank(span).
TraceDims trace_space_dims(const PoissonPresentation& P, const std::vector<Mover>& movers, long max_degree,
                           const FiniteMatrixGroup* group, Execution exec, const Budget& budget = Budget::unlimited());

}  // namespace ptrace
