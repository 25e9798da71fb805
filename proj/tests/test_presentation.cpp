#include <catch_amalgamated.hpp>

#include "idemgen/constructors.hpp"
#include "idemgen/errors.hpp"
#include "idemgen/isomorphism.hpp"
#include "idemgen/presentation.hpp"
#include "support.hpp"

using namespace idemgen;

namespace {

  std::vector<Relation> relations(std::initializer_list<char const*> texts) {
    std::vector<Relation> out;
    for (auto t : texts) {
      out.push_back(parse_relation(t));
    }
    return out;
  }

  void check_relations(PresentationResult const& r, std::vector<Relation> const& rels) {
    REQUIRE(r.semiring.has_value());
    CHECK(testing::oracle_axioms(*r.semiring));
    for (auto const& rel : rels) {
      CHECK(evaluate(*r.semiring, rel.lhs, r.generator_images) == evaluate(*r.semiring, rel.rhs, r.generator_images));
    }
  }

}  // namespace

TEST_CASE("term parsing", "[presentation]") {
  CHECK(to_string(parse_term("x+y*z")) == "(x+(y*z))");
  CHECK(to_string(parse_term("(x+y)*z")) == "((x+y)*z)");
  CHECK(to_string(parse_term("x^3")) == "((x*x)*x)");
  CHECK(to_string(parse_term(" x * ( y + 1 ) ")) == "(x*(y+1))");
  CHECK(parse_term("0").kind == Term::Kind::zero);
  CHECK(parse_term("1").kind == Term::Kind::one);
  CHECK_THROWS_AS(parse_term("x+"), DomainError);
  CHECK_THROWS_AS(parse_term("(x"), DomainError);
  CHECK_THROWS_AS(parse_relation("x"), DomainError);
}

TEST_CASE("no generators with additive idempotency gives B", "[presentation]") {
  auto const r = presentation({}, {}, true);
  REQUIRE(r.status == PresentationStatus::finite);
  CHECK(isomorphic(*r.semiring, boolean_semiring()).has_value());
}

TEST_CASE("free idempotent generator exceeds every bound", "[presentation]") {
  auto const rels = relations({"e*e=e"});
  for (std::size_t bound : {8u, 16u, 64u}) {
    auto const r = presentation({"e"}, rels, false, bound);
    CHECK(r.status == PresentationStatus::exceeds_bound);
    CHECK_FALSE(r.semiring.has_value());
    CHECK(r.universe_bound == bound);
  }
}

TEST_CASE("quotients of N", "[presentation]") {
  // 1 + 1 + 1 = 0 gives Z3.
  auto const z3 = presentation({}, relations({"1+1+1=0"}), false);
  REQUIRE(z3.status == PresentationStatus::finite);
  CHECK(isomorphic(*z3.semiring, zmod(3)).has_value());

  auto const z2x = presentation({"x"}, relations({"1+1=0", "x*x=0"}), false);
  REQUIRE(z2x.status == PresentationStatus::finite);
  CHECK(isomorphic(*z2x.semiring, preset("z2x-sq")).has_value());
  check_relations(z2x, relations({"1+1=0", "x*x=0"}));
}

TEST_CASE("idempotent generators with additive idempotency", "[presentation]") {
  // B[e] with e^2 = e: {0, 1, e, 1+e}.
  auto const rels = relations({"e*e=e"});
  auto const r    = presentation({"e"}, rels, true);
  REQUIRE(r.status == PresentationStatus::finite);
  CHECK(r.semiring->order() == 4);
  check_relations(r, rels);
  CHECK(r.collapsed_generators.empty());
}

TEST_CASE("the B[x,y] presentation", "[presentation]") {
  auto const r = bxy_presentation();
  REQUIRE(r.status == PresentationStatus::finite);
  check_relations(r, relations({"x+y=0", "x*y=0", "y*x=0", "x^2=0", "y^2=0"}));
  // x = x + 0 = x + (x + y) = (x + x) + y = x + y = 0, likewise y.
  CHECK(isomorphic(*r.semiring, boolean_semiring()).has_value());
  CHECK(r.collapsed_generators
        == std::vector<std::pair<std::string, std::string>>{{"x", "0"}, {"y", "0"}});
}

TEST_CASE("bound must be at least 2", "[presentation]") {
  CHECK_THROWS_AS(presentation({}, {}, true, 1), DomainError);
}

TEST_CASE("evaluation in a finite semiring", "[presentation]") {
  auto const s = zmod(7);
  std::map<std::string, element_type> images{{"a", 3}, {"b", 5}};
  CHECK(evaluate(s, parse_term("a*b+1"), images) == 2);
  CHECK(evaluate(s, parse_term("a^3"), images) == 6);
  CHECK_THROWS_AS(evaluate(s, parse_term("c"), images), DomainError);
}
