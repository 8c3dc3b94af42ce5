#include "doctest.h"
#include "ptrace/catalog.hpp"
#include "ptrace/leaves.hpp"
#include "ptrace/parse.hpp"

using namespace ptrace;

namespace {

PresentationPtr load(const std::string& name) { return example(name).presentation; }

std::optional<int> dim_z(const PresentationPtr& P) {
  return singular_support(MorphismPresentation::identity(P)).dim_z;
}

// Constant symplectic plane on the given variable names.
PresentationPtr plane(const std::string& a, const std::string& b, const char* bracket_value) {
  auto r = make_ring({a, b}, {1, 1});
  Poly c = parse_poly(bracket_value, r);
  return std::make_shared<PoissonPresentation>(r, std::vector<Poly>{},
                                               std::vector<std::vector<Poly>>{{Poly(r), c}, {-c, Poly(r)}},
                                               c.is_zero() ? 0 : 2);
}

}  // namespace

TEST_CASE("rank stratification examples") {
  SUBCASE("symplectic plane") {
    LeafReport r = rank_stratification(*load("symplectic:1"));
    REQUIRE(r.levels.size() == 2);
    CHECK_FALSE(r.levels[0].dimension.has_value());
    CHECK(r.levels[1].dimension == 2);
    CHECK(r.verdict);
  }
  SUBCASE("zero bracket") {
    LeafReport r = rank_stratification(*load("zero-plane"));
    REQUIRE(r.levels.size() == 1);
    CHECK(r.levels[0].rank == 0);
    CHECK(r.levels[0].dimension == 2);
    CHECK_FALSE(r.levels[0].ok);
    CHECK_FALSE(r.verdict);
  }
  SUBCASE("elliptic cone") {
    LeafReport r = rank_stratification(*load("elliptic-cone"));
    REQUIRE(r.levels.size() == 2);
    CHECK(r.levels[0].dimension == 0);
    CHECK(r.levels[1].dimension == 2);
    CHECK(r.dim_x == 2);
    CHECK(r.verdict);
  }
}

TEST_CASE("rank loci grow and end at X") {
  for (const char* name : {"elliptic-cone", "elliptic-times-plane", "symplectic:2", "kleinian-a:3", "klein-d:5"}) {
    CAPTURE(name);
    LeafReport r = rank_stratification(*load(name));
    REQUIRE_FALSE(r.levels.empty());
    CHECK(r.levels.back().dimension == r.dim_x);
    for (std::size_t k = 1; k < r.levels.size(); ++k) {
      const auto& lo = r.levels[k - 1].dimension;
      const auto& hi = r.levels[k].dimension;
      if (lo) CHECK((hi && *hi >= *lo));
    }
  }
}

TEST_CASE("isolated quasi-homogeneous surfaces have finitely many leaves") {
  for (const char* name : {"kleinian-a:1", "kleinian-a:2", "kleinian-a:5", "klein-d:4", "klein-d:6", "klein-e:6", "klein-e:7",
                           "klein-e:8", "elliptic-cone"}) {
    CAPTURE(name);
    CHECK(rank_stratification(*load(name)).verdict);
  }
}

TEST_CASE("singular support examples") {
  SingularSupportReport s = singular_support(MorphismPresentation::identity(load("symplectic:1")));
  CHECK(s.ambient_dimension == 4);
  CHECK(s.dim_z == 2);
  CHECK(s.verdict);

  SingularSupportReport z = singular_support(MorphismPresentation::identity(load("zero-plane")));
  CHECK(z.dim_z == 4);
  CHECK_FALSE(z.verdict);

  SingularSupportReport e = singular_support(MorphismPresentation::identity(load("elliptic-cone")));
  CHECK(e.ambient_dimension == 6);
  CHECK(e.dim_z == 3);
  CHECK(e.verdict);
  CHECK(e.ring->nvars() == 6);
}

TEST_CASE("zero section lies in Z") {
  for (const char* name : {"elliptic-cone", "kleinian-a:2", "symplectic:2", "zero-plane", "elliptic-times-plane"}) {
    CAPTURE(name);
    auto P = load(name);
    SingularSupportReport s = singular_support(MorphismPresentation::identity(P));
    LeafReport l = rank_stratification(*P);
    REQUIRE(s.dim_z.has_value());
    CHECK(*s.dim_z >= *l.dim_x);
  }
}

TEST_CASE("singular support verdict is invariant under rescaling") {
  for (const char* name : {"elliptic-cone", "kleinian-a:3", "zero-plane", "symplectic:1"}) {
    CAPTURE(name);
    auto P = load(name);
    for (Scalar c : {Scalar(-1), Scalar::fraction(3, 7), Scalar(5)}) {
      auto Q = std::make_shared<PoissonPresentation>(rescale(*P, c));
      SingularSupportReport a = singular_support(MorphismPresentation::identity(P));
      SingularSupportReport b = singular_support(MorphismPresentation::identity(Q));
      CHECK(a.dim_z == b.dim_z);
      CHECK(a.verdict == b.verdict);
    }
  }
}

TEST_CASE("dim Z is additive on direct sums") {
  auto sym = plane("a", "b", "1");
  auto zero = plane("u", "v", "0");
  auto cone = load("elliptic-cone");
  auto kle = load("kleinian-a:2");
  const std::vector<std::pair<PresentationPtr, PresentationPtr>> pairs = {
      {sym, zero}, {cone, sym}, {kle, zero}, {plane("c", "d", "1"), sym}};
  for (const auto& [p, q] : pairs) {
    auto sum = std::make_shared<PoissonPresentation>(direct_sum(*p, *q));
    auto a = dim_z(p), b = dim_z(q), c = dim_z(sum);
    REQUIRE((a && b && c));
    CHECK(*c == *a + *b);
  }
}

TEST_CASE("minors") {
  auto r = make_ring({"x", "y", "z"}, {1, 1, 1});
  GroebnerBasis none = buchberger(Ideal(r, {}));
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1), z = Poly::variable(r, 2), o(r);
  std::vector<std::vector<Poly>> m = {{o, z, -y}, {-z, o, x}, {y, -x, o}};
  CHECK(minors(m, 1, none).size() == 6);
  auto two = minors(m, 2, none);
  CHECK_FALSE(two.empty());
  CHECK(minors(m, 3, none).empty());  // antisymmetric of odd size
  GroebnerBasis gb = buchberger(Ideal(r, {x, y, z}));
  CHECK(minors(m, 1, gb).empty());
}
