#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "ptrace/groebner.hpp"

namespace ptrace {

/// Affine Poisson variety X = V(I) in V = Spec K[x_1..x_n] with structure
/// matrix pi_ij = {x_i, x_j}. The degree shift d, when present, means
/// deg{a,b} = deg a + deg b - d; absent means the bracket is not graded.
class PoissonPresentation {
 public:
  /// Checks shape, antisymmetry and (when d is given) homogeneity of every
  /// entry and ideal generator. Jacobi and Poisson-ideal checks are separate.
  PoissonPresentation(RingPtr ring, std::vector<Poly> ideal, std::vector<std::vector<Poly>> matrix,
                      std::optional<long> degree_shift, int field_order = 1);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Poly>& ideal_generators() const { return ideal_; }
  Ideal ideal() const { return Ideal(ring_, ideal_); }
  const GroebnerBasis& gb() const { return *gb_; }
  const std::vector<std::vector<Poly>>& matrix() const { return pi_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return pi_[i][j]; }
  std::optional<long> degree_shift() const { return d_; }
  bool is_graded() const { return d_.has_value(); }
  /// Cyclotomic order of the coefficient field (1 for Q).
  int field_order() const { return field_order_; }

  /// Set for Jacobian surface brackets.
  const std::optional<Poly>& jacobian_of() const { return jacobian_of_; }
  void set_jacobian_of(Poly F) { jacobian_of_ = std::move(F); }

  friend bool operator==(const PoissonPresentation& a, const PoissonPresentation& b);

 private:
  RingPtr ring_;
  std::vector<Poly> ideal_;
  std::vector<std::vector<Poly>> pi_;
  std::optional<long> d_;
  int field_order_;
  std::shared_ptr<const GroebnerBasis> gb_;
  std::optional<Poly> jacobian_of_;
};

using PresentationPtr = std::shared_ptr<const PoissonPresentation>;

/// {f, g} = sum_{i<j} pi_ij (d_i f d_j g - d_j f d_i g), reduced mod I_X.
Poly bracket(const PoissonPresentation& P, const Poly& f, const Poly& g);

/// Components xi_f(x_i) = {f, x_i}, reduced mod I_X.
std::vector<Poly> hamiltonian_field(const PoissonPresentation& P, const Poly& f);

/// sum_i field[i] * d_i g (not reduced).
Poly apply_field(const std::vector<Poly>& field, const Poly& g);

/// {x,y} = F_z, {y,z} = F_x, {z,x} = F_y on X = {F = 0}; d = w_x + w_y + w_z - deg F.
PoissonPresentation jacobian_surface_bracket(const Poly& F, int field_order = 1);

/// Variables x1,y1,...,xn,yn with {x_i, y_i} = 1, weights 1, d = 2.
PoissonPresentation symplectic_presentation(std::size_t pairs);

struct JacobiResult {
  bool ok = true;
  std::array<std::size_t, 3> triple{};
  Poly jacobiator;  // reduced cyclic sum at `triple` when !ok
};

/// Cyclic sum {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}} mod I_X for all i<j<k.
JacobiResult jacobi_check(const PoissonPresentation& P);

struct IdealCheckResult {
  bool ok = true;
  std::size_t variable = 0;
  std::size_t generator = 0;
  Poly remainder;
};

/// Whether {x_i, g_k} lies in I_X for every variable and generator.
IdealCheckResult poisson_ideal_check(const PoissonPresentation& P);

/// Throws ValidationError unless both checks pass.
void verify_poisson(const PoissonPresentation& P);

/// Same presentation with pi multiplied by c != 0.
PoissonPresentation rescale(const PoissonPresentation& P, const Scalar& c);

/// Product X1 x X2 with block-diagonal pi; variable names must be disjoint.
PoissonPresentation direct_sum(const PoissonPresentation& a, const PoissonPresentation& b);

/// phi: X -> Y given by the images phi^*(f_j) of generators of O_Y.
class MorphismPresentation {
 public:
  /// Images are moved into the source ring and reduced mod I_X. When the source
  /// is graded each image must be homogeneous.
  MorphismPresentation(PresentationPtr source, std::vector<Poly> images);
  static MorphismPresentation identity(PresentationPtr source);

  const PoissonPresentation& source() const { return *source_; }
  const PresentationPtr& source_ptr() const { return source_; }
  const std::vector<Poly>& images() const { return images_; }
  /// Weighted degree of each image; empty when the source is not graded.
  const std::vector<long>& degrees() const { return degrees_; }

 private:
  PresentationPtr source_;
  std::vector<Poly> images_;
  std::vector<long> degrees_;
};

}  // namespace ptrace
