#include <catch_amalgamated.hpp>

#include "idemgen/census.hpp"
#include "idemgen/classify.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/errors.hpp"
#include "idemgen/peirce.hpp"
#include "idemgen/theorem.hpp"
#include "support.hpp"

using namespace idemgen;

namespace {

  // iso is a bijection onto the product and preserves both operations.
  void check_isomorphism(FiniteSemiring const& s, PeirceResult const& p) {
    std::set<std::vector<element_type>> images;
    for (auto a : testing::all_of(s)) {
      REQUIRE(p.iso[a].size() == p.factors.size());
      images.insert(p.iso[a]);
      for (auto b : testing::all_of(s)) {
        for (std::size_t i = 0; i < p.factors.size(); ++i) {
          auto const& f = p.factors[i];
          CHECK(p.iso[s.add(a, b)][i] == f.add(p.iso[a][i], p.iso[b][i]));
          CHECK(p.iso[s.mul(a, b)][i] == f.mul(p.iso[a][i], p.iso[b][i]));
        }
      }
    }
    std::size_t product = 1;
    for (auto const& f : p.factors) {
      product *= f.order();
    }
    CHECK(images.size() == s.order());
    CHECK(product == s.order());
  }

}  // namespace

TEST_CASE("Z3[x]/(x^2-1) splits into two copies of Z3", "[peirce]") {
  auto const s = preset("z3x-sqm1");
  auto const p = peirce_decompose(s);
  REQUIRE(p.factors.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(p.factors[i].order() == 3);
    CHECK(p.factor_classification[i] == FactorClass::other_no_nontrivial_idempotents);
    CHECK(testing::oracle_isomorphic(p.factors[i], zmod(3)));
  }
  check_isomorphism(s, p);
}

TEST_CASE("B^k has k factors iso to B", "[peirce]") {
  auto s = boolean_semiring();
  for (std::size_t k = 1; k <= 3; ++k) {
    auto const p = peirce_decompose(s);
    CHECK(p.factors.size() == k);
    for (auto c : p.factor_classification) {
      CHECK(c == FactorClass::iso_to_boolean);
    }
    check_isomorphism(s, p);
    s = direct_product(s, boolean_semiring());
  }
}

TEST_CASE("factors of semirings satisfying the main hypotheses are B or Z2", "[peirce]") {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto const& s : enumerate_semirings(n)) {
      auto const r = check_theorem(s, TheoremId::main);
      if (std::ranges::any_of(r.hypotheses, [](Condition const& c) { return !c.holds; })) {
        continue;
      }
      auto const p = peirce_decompose(s);
      check_isomorphism(s, p);
      for (auto c : p.factor_classification) {
        CHECK((c == FactorClass::iso_to_boolean || c == FactorClass::iso_to_z2));
      }
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("every commutative catalog entry with complements decomposes", "[peirce]") {
  for (auto const& s : enumerate_semirings(4)) {
    auto const r = check_theorem(s, TheoremId::additivecom);
    if (!r.conclusion(condition::commutative)->holds) {
      CHECK_THROWS_AS(peirce_decompose(s), DomainError);
      continue;
    }
    if (!r.hypothesis(condition::orthogonal_complements)->holds) {
      CHECK_THROWS_AS(peirce_decompose(s), DomainError);
      continue;
    }
    check_isomorphism(s, peirce_decompose(s));
  }
}

TEST_CASE("non-commutative input is refused", "[peirce]") {
  CHECK_THROWS_AS(peirce_decompose(preset("m2z2")), DomainError);
}

TEST_CASE("factor classification", "[peirce]") {
  CHECK(classify_factor(boolean_semiring()) == FactorClass::iso_to_boolean);
  CHECK(classify_factor(zmod(2)) == FactorClass::iso_to_z2);
  CHECK(classify_factor(zmod(4)) == FactorClass::other_no_nontrivial_idempotents);
  CHECK(classify_factor(zmod(6)) == FactorClass::other);
}
