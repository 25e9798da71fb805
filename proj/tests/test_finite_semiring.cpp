#include <catch_amalgamated.hpp>

#include "idemgen/census.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/errors.hpp"
#include "idemgen/finite_semiring.hpp"
#include "support.hpp"

using namespace idemgen;

namespace {

  std::vector<std::vector<int>> rows(FiniteSemiring const& s, bool mul) {
    std::vector<std::vector<int>> out(s.order(), std::vector<int>(s.order()));
    for (element_type a = 0; a < s.order(); ++a) {
      for (element_type b = 0; b < s.order(); ++b) {
        out[a][b] = mul ? s.mul(a, b) : s.add(a, b);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("structure checks reject malformed tables", "[finite_semiring]") {
  CHECK_THROWS_AS(FiniteSemiring({}, {}, {}, 0, 0), StructureError);
  CHECK_THROWS_AS(FiniteSemiring({"0", "1"}, {0, 1, 1}, {0, 0, 0, 1}, 0, 1), StructureError);
  CHECK_THROWS_AS(FiniteSemiring({"0", "1"}, {0, 1, 1, 2}, {0, 0, 0, 1}, 0, 1), StructureError);
  CHECK_THROWS_AS(FiniteSemiring({"0", "0"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1), StructureError);
  CHECK_THROWS_AS(FiniteSemiring({"0", ""}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1), StructureError);
  CHECK_THROWS_AS(FiniteSemiring({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 2), StructureError);
  CHECK_NOTHROW(FiniteSemiring({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1));
}

TEST_CASE("validated rejects tables that break an axiom", "[finite_semiring]") {
  // 1 + 1 = 1 with 1 * 1 = 0: identity fails.
  CHECK_THROWS_AS(FiniteSemiring::validated({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 0}, 0, 1), AxiomError);
  CHECK(FiniteSemiring::validated({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1) == boolean_semiring());
}

TEST_CASE("validate lists every violated instance", "[finite_semiring]") {
  auto       add = rows(boolean_semiring(), false);
  auto const mul = rows(boolean_semiring(), true);
  add[1][0]      = 0;  // 1 + 0 = 0 breaks identity and commutativity
  auto const r   = validate(add, mul, 0, 1);
  CHECK_FALSE(r.valid);
  std::set<std::string> names;
  for (auto const& v : r.violations) {
    names.insert(v.axiom);
  }
  CHECK(names.contains("additive-commutativity"));
  CHECK_FALSE(names.contains("multiplicative-associativity"));

  CHECK_THROWS_AS(validate({{0, 1}, {1}}, mul, 0, 1), StructureError);
  CHECK_THROWS_AS(validate(add, mul, 0, 5), StructureError);
}

TEST_CASE("validate agrees with a direct axiom check", "[finite_semiring]") {
  std::mt19937 rng(7);
  for (auto const& s : enumerate_semirings(3)) {
    CHECK(validate(s).valid);
    // Perturb one cell of each table and compare verdicts.
    for (int trial = 0; trial < 20; ++trial) {
      auto add  = rows(s, false);
      auto mul  = rows(s, true);
      auto cell = std::uniform_int_distribution<int>(0, 8)(rng);
      auto v    = std::uniform_int_distribution<int>(0, 2)(rng);
      (trial % 2 == 0 ? add : mul)[cell / 3][cell % 3] = v;
      FiniteSemiring::table_type at, mt;
      for (auto const& r : add) {
        at.insert(at.end(), r.begin(), r.end());
      }
      for (auto const& r : mul) {
        mt.insert(mt.end(), r.begin(), r.end());
      }
      FiniteSemiring t({"0", "1", "2"}, at, mt, s.zero(), s.one());
      CHECK(validate(t).valid == testing::oracle_axioms(t));
    }
  }
}

TEST_CASE("every constructor output satisfies the axioms", "[finite_semiring]") {
  for (auto name : {"bool", "trivial", "t2b", "m2z2", "z2x-sq", "z3x-sqm1", "bxy-presentation", "zmod:6",
                    "product:bool,zmod:3", "matrix:2,zmod:3", "triangular:3,bool", "triangular:2,zmod:3"}) {
    INFO(name);
    auto const s = preset(name);
    CHECK(validate(s).valid);
    CHECK(testing::oracle_axioms(s));
  }
}

TEST_CASE("labels resolve to indices", "[finite_semiring]") {
  auto const s = preset("t2b");
  CHECK(s.find("[0 1;0 0]").has_value());
  CHECK_FALSE(s.find("nope").has_value());
  CHECK_THROWS_AS(s.at("nope"), DomainError);
  CHECK(s.label(s.at("[1 1;0 0]")) == "[1 1;0 0]");
}
