#include "doctest.h"
#include "generators.hpp"
#include "ptrace/errors.hpp"
#include "ptrace/parse.hpp"
#include "ptrace/poisson.hpp"

using namespace ptrace;
using namespace ptrace::testing;

namespace {

RingPtr xyz(std::vector<int> w = {1, 1, 1}) { return make_ring({"x", "y", "z"}, std::move(w)); }

std::vector<std::vector<Poly>> matrix_of(const RingPtr& r, const char* xy, const char* yz, const char* zx) {
  Poly a = parse_poly(xy, r), b = parse_poly(yz, r), c = parse_poly(zx, r), z(r);
  return {{z, a, -c}, {-a, z, b}, {c, -b, z}};
}

}  // namespace

TEST_CASE("jacobian bracket on the elliptic cone") {
  auto r = xyz();
  Poly F = parse_poly("x^3 + y^3 + z^3", r);
  PoissonPresentation P = jacobian_surface_bracket(F);
  CHECK(P.degree_shift() == 0);
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1), z = Poly::variable(r, 2);
  CHECK(bracket(P, x, y) == parse_poly("3*z^2", r));
  CHECK(bracket(P, y, z) == parse_poly("3*x^2", r));
  CHECK(bracket(P, z, x) == parse_poly("3*y^2", r));
  CHECK(jacobi_check(P).ok);
  CHECK(poisson_ideal_check(P).ok);
  // F is a Casimir of the ambient bracket.
  for (std::size_t i = 0; i < 3; ++i) CHECK(bracket(P, F, Poly::variable(r, i)).is_zero());
}

TEST_CASE("kleinian bracket grading") {
  auto r = xyz({3, 3, 2});
  PoissonPresentation P = jacobian_surface_bracket(parse_poly("x*y - z^3", r));
  CHECK(P.degree_shift() == 2);
  CHECK(bracket(P, Poly::variable(r, 0), Poly::variable(r, 1)) == parse_poly("-3*z^2", r));
  // deg{a,b} = deg a + deg b - 2
  Poly a = parse_poly("x*z", r), b = parse_poly("y", r);
  CHECK(bracket(P, a, b).homogeneous_degree() == 5 + 3 - 2);
}

TEST_CASE("symplectic presentation") {
  PoissonPresentation P = symplectic_presentation(2);
  CHECK(P.nvars() == 4);
  CHECK(P.ring()->names() == std::vector<std::string>{"x1", "y1", "x2", "y2"});
  CHECK(P.degree_shift() == 2);
  const auto& r = P.ring();
  CHECK(bracket(P, Poly::variable(r, 0), Poly::variable(r, 1)) == Poly(r, Scalar(1)));
  CHECK(bracket(P, Poly::variable(r, 0), Poly::variable(r, 2)).is_zero());
  CHECK(jacobi_check(P).ok);
  CHECK(P.ideal_generators().empty());
}

TEST_CASE("jacobi checker finds the failing triple") {
  auto r = xyz();
  PoissonPresentation P(r, {}, matrix_of(r, "1", "1", "x"), std::nullopt);
  JacobiResult j = jacobi_check(P);
  REQUIRE_FALSE(j.ok);
  CHECK(j.triple == std::array<std::size_t, 3>{0, 1, 2});
  // {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = 0 + {y,x} + 0 = -1
  CHECK(j.jacobiator == Poly(r, Scalar(-1)));
  CHECK_THROWS_AS(verify_poisson(P), ValidationError);
}

TEST_CASE("random jacobian brackets satisfy jacobi") {
  std::mt19937 rng(5);
  auto r = xyz();
  for (int t = 0; t < 5; ++t) {
    Poly F = random_homogeneous(rng, r, 3, 5);
    if (F.is_zero()) continue;
    PoissonPresentation P = jacobian_surface_bracket(F);
    CHECK(jacobi_check(P).ok);
    CHECK(poisson_ideal_check(P).ok);
  }
}

TEST_CASE("leibniz rule for random polynomials") {
  std::mt19937 rng(11);
  auto r = xyz();
  PoissonPresentation P(r, {}, matrix_of(r, "z", "x", "y"), 1);  // so(3)*
  CHECK(jacobi_check(P).ok);
  for (int t = 0; t < 20; ++t) {
    Poly f = random_poly(rng, r), g = random_poly(rng, r), h = random_poly(rng, r);
    CHECK(bracket(P, f, g * h) == bracket(P, f, g) * h + g * bracket(P, f, h));
    CHECK(bracket(P, f, g) == -bracket(P, g, f));
    CHECK(apply_field(hamiltonian_field(P, f), g) == bracket(P, f, g));
  }
}

TEST_CASE("validation at construction") {
  auto r = xyz();
  auto m = matrix_of(r, "z", "x", "y");
  m[1][0] = m[0][1];  // not antisymmetric
  CHECK_THROWS_AS(PoissonPresentation(r, {}, m, std::nullopt), ValidationError);
  // declared shift disagrees with the entries
  CHECK_THROWS_AS(PoissonPresentation(r, {}, matrix_of(r, "z", "x", "y"), 0), ValidationError);
  CHECK_THROWS_AS(PoissonPresentation(r, {parse_poly("x + y^2", r)}, matrix_of(r, "z", "x", "y"), 1), ValidationError);
}

TEST_CASE("poisson ideal check") {
  auto r = xyz();
  // x is not a Casimir of so(3)*: {y, x} = -z is not in (x).
  PoissonPresentation bad(r, {parse_poly("x", r)}, matrix_of(r, "z", "x", "y"), 1);
  IdealCheckResult c = poisson_ideal_check(bad);
  CHECK_FALSE(c.ok);
  CHECK_THROWS_AS(verify_poisson(bad), ValidationError);
  PoissonPresentation good(r, {parse_poly("x^2 + y^2 + z^2", r)}, matrix_of(r, "z", "x", "y"), 1);
  CHECK(poisson_ideal_check(good).ok);
}

TEST_CASE("rescale and direct sum") {
  auto r = xyz();
  PoissonPresentation P = jacobian_surface_bracket(parse_poly("x^3 + y^3 + z^3", r));
  PoissonPresentation Q = rescale(P, Scalar::fraction(-2, 3));
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  CHECK(bracket(Q, x, y) == Scalar::fraction(-2, 3) * bracket(P, x, y));
  CHECK_THROWS_AS(rescale(P, Scalar(0)), ValidationError);

  PoissonPresentation S = symplectic_presentation(1);
  PoissonPresentation D = direct_sum(P, S);
  CHECK(D.nvars() == 5);
  CHECK(D.ideal_generators().size() == 1);
  CHECK(jacobi_check(D).ok);
  CHECK_FALSE(D.degree_shift().has_value());  // shifts 0 and 2 differ
  CHECK_THROWS_AS(direct_sum(S, S), ValidationError);
}

TEST_CASE("morphism presentation") {
  auto P = std::make_shared<PoissonPresentation>(symplectic_presentation(1));
  const auto& r = P->ring();
  MorphismPresentation M(P, {parse_poly("x1^2", r), parse_poly("x1*y1", r), Poly(r), parse_poly("y1^2", r)});
  CHECK(M.images().size() == 3);
  CHECK(M.degrees() == std::vector<long>{2, 2, 2});
  CHECK_THROWS_AS(MorphismPresentation(P, {parse_poly("x1 + y1^2", r)}), ValidationError);
  MorphismPresentation id = MorphismPresentation::identity(P);
  CHECK(id.images().size() == 2);
}
