#include <catch_amalgamated.hpp>

#include <algorithm>

#include "idemgen/classify.hpp"
#include "idemgen/closure.hpp"
#include "idemgen/complement.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/isomorphism.hpp"
#include "idemgen/lift.hpp"
#include "idemgen/peirce.hpp"
#include "support.hpp"

using namespace idemgen;

namespace {

  std::vector<std::string> labels(FiniteSemiring const& s, std::vector<element_type> const& v) {
    std::vector<std::string> out;
    for (auto a : v) {
      out.push_back(s.label(a));
    }
    std::ranges::sort(out);
    return out;
  }

}  // namespace

TEST_CASE("validation corner cases", "[examples]") {
  CHECK(validate({{0}}, {{0}}, 0, 0).valid);
  CHECK(validate({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1).valid);
  CHECK(validate({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 0, 1).valid);
}

TEST_CASE("element-level operations", "[examples]") {
  auto const b   = boolean_semiring();
  auto const z2x = preset("z2x-sq");
  auto const t   = preset("t2b");
  auto const e12 = t.at("[0 1;0 0]");

  CHECK(scalar_repeat(b, 2, 1) == 1);
  CHECK(scalar_repeat(z2x, 2, z2x.at("x")) == z2x.zero());
  CHECK(scalar_repeat(t, 0, e12) == t.zero());

  CHECK(additive_inverse(z2x, z2x.at("x")) == z2x.at("x"));
  CHECK(additive_inverse(t, t.zero()) == t.zero());
  CHECK_FALSE(additive_inverse(b, 1).has_value());

  CHECK(power(b, 1, 5) == 1);
  CHECK(power(t, e12, 2) == t.zero());
  CHECK(power(t, e12, 0) == t.one());

  CHECK(nilpotency_index(t, e12) == 2u);
  CHECK(nilpotency_index(t, t.zero()) == 1u);
  CHECK_FALSE(nilpotency_index(b, 1).has_value());

  auto const cls = element_classes(z2x);
  CHECK(labels(z2x, cls.nilpotents.members()) == std::vector<std::string>{"0", "x"});
  CHECK(cls.nilidempotents.is_full());
}

TEST_CASE("closure examples", "[examples]") {
  auto const t = preset("t2b");
  auto const i = element_classes(t).idempotents;
  CHECK(mult_closure(t, i).is_full());
  CHECK(add_closure(t, i) == i);
  CHECK(mult_closure(t, t.elements()).is_full());
  CHECK(add_closure(t, ElementSet(t.order(), {t.zero()})) == ElementSet(t.order(), {t.zero()}));

  auto const z3 = preset("z3x-sqm1");
  auto const iz = element_classes(z3).idempotents;
  auto const mc = mult_closure(z3, iz);
  CHECK(mc == iz);
  CHECK(mc.size() == 4);

  auto const m = preset("m2z2");
  CHECK(add_closure(m, element_classes(m).idempotents).is_full());

  auto const cert = generation_certificate(t, GenerationMode::additive, GeneratorClass::idempotents);
  CHECK_FALSE(cert.generated);
  CHECK(cert.uncovered == ElementSet(t.order(), {t.at("[0 1;0 0]")}));
  for (auto mode : {GenerationMode::multiplicative, GenerationMode::additive}) {
    CHECK(generation_certificate(boolean_semiring(), mode, GeneratorClass::idempotents).generated);
  }
}

TEST_CASE("complement examples", "[examples]") {
  for (auto name : {"bool", "t2b", "zmod:6", "z2x-sq"}) {
    auto const s = preset(name);
    auto const o = orthogonal_complement(s, s.one());
    REQUIRE(o.has_value());
    CHECK(o->f == s.zero());
    auto const n = nilorthogonal_complement(s, s.one());
    REQUIRE(n.has_value());
    CHECK(n->f == s.zero());
    CHECK(n->x == s.zero());
  }
  auto const t = preset("t2b");
  CHECK(orthogonal_complement(t, t.at("[1 0;0 0]"))->f == t.at("[0 0;0 1]"));

  auto const z2x = preset("z2x-sq");
  auto const w   = nilorthogonal_complement(z2x, z2x.zero());
  REQUIRE(w.has_value());
  CHECK(w->f == z2x.one());
  CHECK(w->x == z2x.zero());
}

TEST_CASE("decomposition examples", "[examples]") {
  auto const z3 = preset("z3x-sqm1");
  auto const ds = orthogonal_decompositions(z3, z3.one(), 2);
  std::vector<std::vector<std::string>> named;
  for (auto const& d : ds) {
    named.push_back(labels(z3, d));
  }
  CHECK(std::ranges::find(named, std::vector<std::string>{"1"}) != named.end());
  CHECK(std::ranges::find(named, std::vector<std::string>{"2+2x", "2+x"}) != named.end());

  CHECK(orthogonal_decompositions(z3, z3.zero(), 3).empty());

  auto const t  = preset("t2b");
  auto const dt = orthogonal_decompositions(t, t.one(), 2);
  CHECK(std::ranges::find(dt, std::vector<element_type>{t.at("[1 0;0 0]"), t.at("[0 0;0 1]")}) != dt.end());
}

TEST_CASE("lifting an idempotent takes no steps", "[examples]") {
  for (auto name : {"bool", "zmod:4", "z2x-sq", "z3x-sqm1"}) {
    auto const s = preset(name);
    for (auto e : element_classes(s).idempotents.members()) {
      auto const tr = lift_nilidempotent(s, e);
      CHECK(tr.f == e);
      CHECK(tr.correction == s.zero());
      CHECK(tr.iterations == 0);
    }
  }
}

TEST_CASE("Peirce examples", "[examples]") {
  auto const bb = direct_product(boolean_semiring(), boolean_semiring());
  auto const p  = peirce_decompose(bb);
  CHECK(labels(bb, p.primitives) == std::vector<std::string>{"(0,1)", "(1,0)"});
  for (auto c : p.factor_classification) {
    CHECK(c == FactorClass::iso_to_boolean);
  }
  auto const q = peirce_decompose(boolean_semiring());
  CHECK(q.primitives == std::vector<element_type>{1});
  CHECK(q.factor_classification == std::vector<FactorClass>{FactorClass::iso_to_boolean});
}

TEST_CASE("isomorphism examples", "[examples]") {
  auto const t   = preset("t2b");
  auto const phi = isomorphic(t, t);
  REQUIRE(phi.has_value());
  CHECK(is_isomorphism(t, t, *phi));
  CHECK_FALSE(isomorphic(boolean_semiring(), zmod(2)).has_value());
}
