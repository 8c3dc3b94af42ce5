#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptrace/group.hpp"
#include "ptrace/hp0_kernels.hpp"
#include "ptrace/poisson.hpp"

namespace ptrace {

enum class Status { CertifiedComplete, BoundNotMet, NoBound };

std::string to_string(Status s);

struct HP0Report {
  std::vector<std::size_t> per_degree;
  std::optional<std::vector<std::size_t>> invariant_per_degree;
  std::size_t total = 0;
  std::optional<std::size_t> invariant_total;
  long max_degree = 0;
  bool bound_computed = false;
  Codimension bound;  // meaningful only when bound_computed; nullopt is infinite
  Status status = Status::NoBound;
  std::vector<std::uint64_t> seeds;
};

struct BoundSample {
  std::uint64_t seed = 0;
  std::vector<long> covector;
  Codimension codim;          // nullopt: infinite (or not computed, see error)
  std::optional<std::string> error;  // e.g. budget exhausted for this sample
};

struct BoundReport {
  std::vector<BoundSample> samples;
  std::optional<std::size_t> best;  // min over finite samples
};

inline constexpr long kDefaultCovectorRange = 10;

/// dim HP0(A)_m for m <= max_degree, spanning xi_{x_i}(A_{m+d-w_i}) inside A_m.
HP0Report hp0_absolute(const PoissonPresentation& P, long max_degree, Execution exec = Execution::Parallel,
                       const Budget& budget = Budget::unlimited());

/// dims of O_X / {phi^* O_Y, O_X} through max_degree.
HP0Report hp0_relative(const MorphismPresentation& M, long max_degree, Execution exec = Execution::Parallel,
                       const Budget& budget = Budget::unlimited());

/// As hp0_relative, adding the dimensions of the G-invariant parts.
HP0Report hp0_equivariant(const MorphismPresentation& M, const FiniteMatrixGroup& G, long max_degree,
                          Execution exec = Execution::Parallel, const Budget& budget = Budget::unlimited());

/// Covector with entries in [-range, range] \ {0}, a pure function of the seed.
std::vector<long> sample_covector(std::uint64_t seed, std::size_t n, long range = kDefaultCovectorRange);

/// Generators of J_p' = (g_k, (v_j, p)) where (v_j, p) = sum_i {phi^* f_j, x_i} p_i.
std::vector<Poly> jp_generators(const MorphismPresentation& M, const std::vector<long>& p);

/// codim J_p' for covectors drawn with seeds seed, seed+1, ..., seed+samples-1.
/// `step_limit` (0 = none) applies to each sample separately.
BoundReport jp_bound(const MorphismPresentation& M, std::size_t samples, std::uint64_t seed,
                     long range = kDefaultCovectorRange, std::uint64_t step_limit = 0);

/// Attaches the bound and sets the status.
HP0Report certify(HP0Report report, const BoundReport& bound);

/// Codimension of the Jacobian ideal of F.
Codimension milnor_number(const Poly& F);

/// The space O_W / {O_W^K, O_W} for W = (V^K)^perp, with its K-invariant part.
HP0Report h_of_k(const FiniteMatrixGroup& G, const DenseMatrix& omega, const ParabolicDatum& K, long max_degree,
                 Execution exec = Execution::Parallel, const Budget& budget = Budget::unlimited());

/// Upper bound on the number of irreducible finite-dimensional representations
/// of a filtered quantization; known only for certified reports.
std::optional<std::size_t> rep_bound(const HP0Report& report);

/// 2 * top degree of the Jacobi ring for Jacobian brackets of isolated
/// singularities, 12 otherwise.
long default_max_degree(const PoissonPresentation& P);

}  // namespace ptrace
