#include "doctest.h"
#include "generators.hpp"
#include "ptrace/errors.hpp"
#include "ptrace/groebner.hpp"
#include "ptrace/parse.hpp"

using namespace ptrace;
using namespace ptrace::testing;

namespace {

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, std::move(g));
}

void check_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& p = gb.polys();
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p[i].leading_coefficient().is_one());
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i != j) CHECK_FALSE(p[i].leading_monomial().divides(p[j].leading_monomial()));
      if (i < j) CHECK(gb.normal_form(s_polynomial(p[i], p[j])).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("buchberger: lex example computed by hand") {
  // S(x^2-1, xy-1) = y(x^2-1) - x(xy-1) = x - y; then xy - 1 -> y^2 - 1.
  auto r = make_ring({"x", "y"}, {1, 1}, MonomialOrder::lex());
  GroebnerBasis gb = buchberger(ideal_of(r, {"x^2 - 1", "x*y - 1"}));
  REQUIRE(gb.polys().size() == 2);
  CHECK(gb.polys()[0] == parse_poly("y^2 - 1", r));
  CHECK(gb.polys()[1] == parse_poly("x - y", r));
  check_buchberger_criterion(gb);
}

TEST_CASE("buchberger: trivial and degenerate inputs") {
  auto r = make_ring({"x", "y"}, {1, 1});
  GroebnerBasis gb = buchberger(ideal_of(r, {"x"}));
  REQUIRE(gb.polys().size() == 1);
  CHECK(gb.polys()[0] == parse_poly("x", r));
  CHECK_THROWS_AS(Ideal(r, {Poly(r)}), ValidationError);
  CHECK(buchberger(Ideal(r, {})).polys().empty());
  CHECK(buchberger(ideal_of(r, {"x", "x + 1"})).is_unit());
}

TEST_CASE("buchberger: order can be switched per call") {
  auto r = make_ring({"x", "y"}, {1, 1});
  GroebnerBasis gb = buchberger(ideal_of(r, {"x^2 - 1", "x*y - 1"}), MonomialOrder::lex());
  CHECK(gb.ring()->order() == MonomialOrder::lex());
  CHECK(gb.polys().back().to_string() == "x - y");
}

TEST_CASE("buchberger: step budget") {
  auto r = make_ring({"x", "y", "z"}, {1, 1, 1});
  Budget tiny(3);
  CHECK_THROWS_AS(buchberger(ideal_of(r, {"x^3 - y*z^2", "y^3 - x*z^2", "z^3 - x^2*y + x*y*z"}), tiny), BudgetExceeded);
}

TEST_CASE("normal form") {
  auto r = make_ring({"x", "y"}, {1, 1});
  GroebnerBasis gb = buchberger(ideal_of(r, {"x^2 - y"}));
  CHECK(gb.normal_form(parse_poly("x^2", r)) == parse_poly("y", r));
  CHECK(gb.normal_form(parse_poly("x^3*y - x*y^2", r)).is_zero());
  GroebnerBasis max = buchberger(ideal_of(r, {"x", "y"}));
  CHECK(max.normal_form(Poly(r, Scalar(7))) == Poly(r, Scalar(7)));
}

TEST_CASE("normal form properties on random ideals") {
  std::mt19937 rng(17);
  auto r = make_ring({"x", "y", "z"}, {1, 1, 1});
  for (int t = 0; t < 12; ++t) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k) {
      Poly g = random_poly(rng, r, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    GroebnerBasis gb = buchberger(Ideal(r, gens));
    check_buchberger_criterion(gb);
    Poly f = random_poly(rng, r, 4, 4), g = random_poly(rng, r, 3, 3);
    Poly nf = gb.normal_form(f);
    CHECK(gb.normal_form(nf) == nf);
    CHECK(gb.normal_form(f - nf).is_zero());
    for (const auto& term : nf.terms()) CHECK(gb.is_standard(term.mono));
    CHECK(gb.normal_form(f * g) == gb.normal_form(nf * gb.normal_form(g)));
  }
}

TEST_CASE("buchberger output does not depend on generator order (homogeneous)") {
  std::mt19937 rng(23);
  auto r = make_ring({"x", "y", "z"}, {1, 2, 1});
  for (int t = 0; t < 8; ++t) {
    std::vector<Poly> gens;
    for (long d : {2, 3, 3}) {
      Poly g = random_homogeneous(rng, r, d, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    GroebnerBasis a = buchberger(Ideal(r, gens));
    std::reverse(gens.begin(), gens.end());
    GroebnerBasis b = buchberger(Ideal(r, gens));
    CHECK(a.polys() == b.polys());
  }
}

TEST_CASE("standard monomials") {
  auto r = make_ring({"x", "y", "z"}, {1, 1, 1});
  GroebnerBasis cubic = buchberger(ideal_of(r, {"x^3 + y^3 + z^3"}));
  CHECK(cubic.standard_monomials(1).size() == 3);
  CHECK(cubic.standard_monomials(0).size() == 1);
  // dim (Q[x,y,z]/(xy - z^2))_2 = 6 - 1
  GroebnerBasis cone = buchberger(ideal_of(r, {"x*y - z^2"}));
  CHECK(cone.standard_monomials(2).size() == 5);
}

TEST_CASE("codimension") {
  auto two = make_ring({"x", "y"}, {1, 1});
  CHECK(codimension(ideal_of(two, {"x", "y"})) == 1);
  CHECK_FALSE(codimension(ideal_of(two, {"x"})).has_value());
  CHECK(codimension(ideal_of(two, {"1"})) == 0);

  // Jacobi ring of x^3+y^3+z^3: basis 1,x,y,z,xy,xz,yz,xyz.
  auto three = make_ring({"x", "y", "z"}, {1, 1, 1});
  GroebnerBasis jac = buchberger(ideal_of(three, {"3*x^2", "3*y^2", "3*z^2"}));
  CHECK(codimension(jac) == 8);
  CHECK(top_standard_degree(jac) == 3);
}

TEST_CASE("krull dimension") {
  auto r = make_ring({"x", "y", "z"}, {1, 1, 1});
  CHECK(krull_dimension(ideal_of(r, {"x*y - z^2"})) == 2);
  CHECK(krull_dimension(ideal_of(r, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension(Ideal(r, {})) == 3);
  CHECK_FALSE(krull_dimension(ideal_of(r, {"x", "x - 1"})).has_value());
  CHECK(krull_dimension(ideal_of(r, {"x*y", "x*z"})) == 2);
  CHECK(krull_dimension(ideal_of(r, {"x*y*z"})) == 2);
  CHECK(krull_dimension(ideal_of(r, {"x^2", "y*z"})) == 1);
}

TEST_CASE("hilbert function") {
  auto one = make_ring({"x"}, {1});
  CHECK(hilbert_function(Ideal(one, {}), 3) == std::vector<std::size_t>{1, 1, 1, 1});

  // C(m+2,2) - C(m-1,2)
  auto r = make_ring({"x", "y", "z"}, {1, 1, 1});
  CHECK(hilbert_function(ideal_of(r, {"x^3+y^3+z^3"}), 3) == std::vector<std::size_t>{1, 3, 6, 9});

  auto two = make_ring({"x", "y"}, {1, 1});
  CHECK(hilbert_function(ideal_of(two, {"x", "y"}), 2) == std::vector<std::size_t>{1, 0, 0});
  CHECK_THROWS_AS(hilbert_function(ideal_of(two, {"x + y^2"}), 2), ValidationError);
  // Same ideal is homogeneous for weights (2,1).
  CHECK(hilbert_function(ideal_of(two, {"x + y^2"}), Weights({2, 1}), 4) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});
}

TEST_CASE("finite codimension agrees with krull dimension and the Hilbert sum") {
  auto r = make_ring({"x", "y", "z"}, {1, 1, 1});
  for (auto gens : {std::vector<const char*>{"x^2", "y^2", "z^2"}, std::vector<const char*>{"x*y", "x^2 - y^2", "z^3"},
                    std::vector<const char*>{"x^2 + y*z", "y^2 + x*z", "z^2 + x*y"}}) {
    std::vector<Poly> g;
    for (auto s : gens) g.push_back(parse_poly(s, r));
    Ideal I(r, g);
    Codimension c = codimension(I);
    REQUIRE(c.has_value());
    CHECK(krull_dimension(I) == 0);
    std::size_t sum = 0;
    for (auto h : hilbert_function(I, 12)) sum += h;
    CHECK(sum == *c);
  }
}
