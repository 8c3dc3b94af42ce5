#include "doctest.h"
#include "generators.hpp"
#include "ptrace/errors.hpp"
#include "ptrace/parse.hpp"

using namespace ptrace;
using namespace ptrace::testing;

namespace {

RingPtr xyz(std::vector<int> w = {1, 1, 1}) { return make_ring({"x", "y", "z"}, std::move(w)); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto r = make_ring({"x", "y"}, {1, 1});
  CHECK(parse_poly("(x+y)*(x-y)", r) == parse_poly("x^2 - y^2", r));
  CHECK(parse_poly("x^2*y", r).evaluate(std::vector<Scalar>{2, 3}) == Scalar(12));
  CHECK(parse_poly("x - x", r).is_zero());

  auto s = xyz();
  CHECK(parse_poly("x^3+y^3+z^3", s).derivative(2) == parse_poly("3*z^2", s));
}

TEST_CASE("parser syntax") {
  auto r = xyz();
  CHECK(parse_poly("3x y", r) == parse_poly("3*x*y", r));
  CHECK(parse_poly("x^2y", r) == parse_poly("x^2*y", r));
  CHECK(parse_poly("(x + 1)^2 - 2x", r) == parse_poly("x^2 + 1", r));
  CHECK(parse_poly("1/2*x", r) == Scalar::fraction(1, 2) * parse_poly("x", r));
  CHECK(parse_poly("x/3", r) == Scalar::fraction(1, 3) * parse_poly("x", r));
  CHECK(parse_poly("-x", r) == -parse_poly("x", r));
}

TEST_CASE("parser rejects bad input and names the token") {
  auto r = xyz();
  try {
    parse_poly("x + w^2", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "w");
    CHECK(std::string(e.what()).find("'w'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly("x +", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x / y", r), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x $ y", r), ParseError);
  CHECK_THROWS_AS(parse_poly("", r), ParseError);
  CHECK_THROWS_AS(parse_poly("zeta*x", r), ParseError);  // rational field: zeta unknown
  CHECK(parse_poly("zeta*x", r, 3).leading_coefficient() == Scalar::zeta(3));
  CHECK(parse_poly("zeta^-1", r, 3) == Poly(r, Scalar::zeta(3) * Scalar::zeta(3)));
}

TEST_CASE("polynomial text round-trips") {
  std::mt19937 rng(5);
  auto r = xyz({1, 2, 3});
  for (int t = 0; t < 30; ++t) {
    Poly f = random_poly(rng, r, 4, 5);
    CHECK(parse_poly(f.to_string(), r) == f);
  }
  Poly g = Poly(r, Scalar::zeta(5) + 1) * parse_poly("x", r) - parse_poly("y", r);
  CHECK(parse_poly(g.to_string(), r, 5) == g);
}

TEST_CASE("homogeneous components") {
  auto one = make_ring({"x"}, {1});
  Poly f = parse_poly("1 + x + x^2", one);
  CHECK(f.homogeneous_component(1) == parse_poly("x", one));
  CHECK(f.homogeneous_component(7).is_zero());

  auto r = xyz({3, 3, 2});
  Poly g = parse_poly("x*y - z^3", r);
  CHECK(g.homogeneous_component(6) == g);
  CHECK(g.homogeneous_degree() == 6);

  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    Poly h = random_poly(rng, r, 4, 6);
    Poly sum(r);
    for (long m = 0; m <= h.degree(); ++m) sum += h.homogeneous_component(m);
    CHECK(sum == h);
  }
}

TEST_CASE("monomial basis") {
  auto b = monomial_basis(Weights({1, 1}), 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Monomial{2, 0});
  CHECK(b[1] == Monomial{1, 1});
  CHECK(b[2] == Monomial{0, 2});

  auto z2 = monomial_basis(Weights({3, 3, 2}), 4);
  REQUIRE(z2.size() == 1);
  CHECK(z2[0] == Monomial{0, 0, 2});

  auto unit = monomial_basis(Weights({2, 5}), 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_one());
}

TEST_CASE("monomial basis counts match brute-force lattice enumeration") {
  const std::vector<std::vector<int>> weight_sets = {{1}, {2}, {1, 1}, {1, 2}, {3, 3, 2}, {1, 2, 3}, {2, 2, 5}};
  for (const auto& w : weight_sets) {
    for (long top = 0; top <= 10; ++top) {
      std::size_t via_basis = 0;
      for (long m = 0; m <= top; ++m) via_basis += monomial_basis(Weights(w), m).size();
      // Brute force over the box [0, top]^n.
      std::size_t brute = 0;
      std::vector<long> e(w.size(), 0);
      for (;;) {
        long d = 0;
        for (std::size_t i = 0; i < w.size(); ++i) d += e[i] * w[i];
        if (d <= top) ++brute;
        std::size_t i = 0;
        while (i < e.size() && ++e[i] > top) e[i++] = 0;
        if (i == e.size()) break;
      }
      CHECK(via_basis == brute);
    }
  }
}

TEST_CASE("monomial order axioms") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<unsigned> d(0, 3);
  auto rand_mono = [&] { return Monomial{d(rng), d(rng), d(rng)}; };
  const Weights w({1, 2, 3});
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                            MonomialOrder(MonomialOrder::Kind::WeightedGrevlex, {2, 0, 1}),
                            MonomialOrder(MonomialOrder::Kind::Lex, {1, 2, 0})}) {
    for (int t = 0; t < 200; ++t) {
      const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      const int ab = order.compare(a, b, w);
      CHECK(ab == -order.compare(b, a, w));
      CHECK((ab == 0) == (a == b));
      if (ab > 0 && order.compare(b, c, w) > 0) CHECK(order.compare(a, c, w) > 0);
      CHECK(order.compare(a * c, b * c, w) == ab);
      if (!c.is_one()) CHECK(order.compare(a * c, a, w) > 0);
    }
  }
}

TEST_CASE("Leibniz rule for partial derivatives") {
  std::mt19937 rng(13);
  auto r = xyz({1, 2, 1});
  for (int t = 0; t < 25; ++t) {
    Poly f = random_poly(rng, r), g = random_poly(rng, r);
    for (std::size_t i = 0; i < 3; ++i) CHECK((f * g).derivative(i) == f * g.derivative(i) + g * f.derivative(i));
  }
}

TEST_CASE("weights and rings validate") {
  CHECK_THROWS_AS(Weights({1, 0}), ValidationError);
  CHECK_THROWS_AS(make_ring({"x", "x"}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(make_ring({"x", "y"}, {1}), ValidationError);
}
