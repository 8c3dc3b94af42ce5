#pragma once

#include <optional>
#include <vector>

#include "ptrace/poisson.hpp"

namespace ptrace {

struct RankLevel {
  std::size_t rank = 0;              // the locus is {rank pi <= rank}
  std::vector<Poly> ideal;           // I_X plus nonzero minors of size rank + 2
  std::optional<int> dimension;      // std::nullopt when the locus is empty
  bool ok = true;                    // dimension <= rank
};

struct LeafReport {
  std::size_t ambient_dimension = 0;
  std::optional<int> dim_x;
  /// Levels 0, 2, 4, ... up to and including the first one whose locus is all of X.
  std::vector<RankLevel> levels;
  bool verdict = true;
};

/// Rank loci of pi over X via all (2k+2)-minors.
LeafReport rank_stratification(const PoissonPresentation& P, const Budget& budget = Budget::unlimited());

struct SingularSupportReport {
  std::size_t ambient_dimension = 0;  // 2 dim V
  std::size_t dim_v = 0;
  RingPtr ring;                       // variables x..., then one covector variable per x
  std::vector<Poly> ideal;
  std::optional<int> dim_z;
  bool verdict = false;               // dim Z <= dim V
};

/// Z = {(x,p) : x in X, sum_i {phi^* f_j, x_i}(x) p_i = 0 for all j}.
SingularSupportReport singular_support(const MorphismPresentation& M, const Budget& budget = Budget::unlimited());

/// All minors of `m` of size k (entries reduced by `gb`), zero ones dropped.
std::vector<Poly> minors(const std::vector<std::vector<Poly>>& m, std::size_t k, const GroebnerBasis& gb);

}  // namespace ptrace
