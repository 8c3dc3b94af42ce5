#pragma once

#include <optional>
#include <vector>

#include "ptrace/matrix.hpp"
#include "ptrace/poisson.hpp"

namespace ptrace {

/// A finite group of n x n matrices acting on points by v -> g v and on
/// functions by (g.f)(x) = f(g x), i.e. x_i -> sum_k g_ik x_k.
class FiniteMatrixGroup {
 public:
  /// Verifies that `elements` is closed under products and inverses and contains I.
  explicit FiniteMatrixGroup(std::vector<DenseMatrix> elements);

  std::size_t order() const { return elems_.size(); }
  std::size_t dim() const { return elems_.empty() ? 0 : elems_[0].rows(); }
  const std::vector<DenseMatrix>& elements() const { return elems_; }
  const DenseMatrix& operator[](std::size_t i) const { return elems_[i]; }
  std::size_t identity_index() const { return identity_; }
  std::optional<std::size_t> index_of(const DenseMatrix& g) const;
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

 private:
  std::vector<DenseMatrix> elems_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

inline constexpr std::size_t kDefaultGroupCap = 1024;

/// Group generated by `generators`; throws ValidationError("group too large or
/// infinite") once more than `cap` elements appear.
FiniteMatrixGroup close_group(const std::vector<DenseMatrix>& generators, std::size_t cap = kDefaultGroupCap);

/// g^T omega g == omega for every element.
bool preserves_form(const FiniteMatrixGroup& G, const DenseMatrix& omega);

/// Whether G maps I_X into itself and commutes with the bracket on generators.
bool preserves_presentation(const FiniteMatrixGroup& G, const PoissonPresentation& P);

/// f(g x).
Poly act(const DenseMatrix& g, const Poly& f);

/// (1/|G|) sum_g g.f
Poly reynolds(const FiniteMatrixGroup& G, const Poly& f);

/// Homogeneous generators of K[V]^G from a Reynolds sweep up to degree |G|.
std::vector<Poly> invariant_generators(const FiniteMatrixGroup& G, const RingPtr& ring,
                                       const Budget& budget = Budget::unlimited());

/// Constant structure matrix of P as a DenseMatrix; throws if some entry is not constant.
DenseMatrix constant_matrix(const PoissonPresentation& P);

struct ParabolicDatum {
  std::vector<std::size_t> elements;      // indices into G, ascending
  DenseMatrix fixed_basis;                // columns span V^K
  std::optional<DenseMatrix> complement;  // columns span (V^K)^perp when omega is given
  std::vector<std::size_t> normalizer;    // indices of N(K)
  std::size_t quotient_order = 1;         // |N(K)/K|
};

/// Pointwise stabilizers of the subspaces obtained by intersecting element
/// fixed spaces; these are exactly the stabilizers G_v. Sorted by |K|.
std::vector<ParabolicDatum> parabolic_subgroups(const FiniteMatrixGroup& G,
                                                const std::optional<DenseMatrix>& omega = std::nullopt);

}  // namespace ptrace
