#include <catch_amalgamated.hpp>

#include "idemgen/canonical.hpp"
#include "idemgen/census.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/errors.hpp"
#include "idemgen/isomorphism.hpp"
#include "support.hpp"

using namespace idemgen;

namespace {

  // Regression constants, fixed after agreement with the brute-force oracle.
  constexpr std::size_t order3_count = 6;
  constexpr std::size_t order4_count = 40;

  bool in_catalog(std::vector<FiniteSemiring> const& catalog, FiniteSemiring const& s) {
    return std::ranges::any_of(catalog, [&](auto const& t) { return isomorphic(s, t).has_value(); });
  }

}  // namespace

TEST_CASE("orders 1 and 2", "[census]") {
  auto const one = enumerate_semirings(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front().is_trivial());

  auto const two = enumerate_semirings(2);
  REQUIRE(two.size() == 2);
  CHECK(in_catalog(two, boolean_semiring()));
  CHECK(in_catalog(two, zmod(2)));
}

TEST_CASE("order 3 agrees with brute force over all table pairs", "[census]") {
  auto const staged = enumerate_semirings(3);
  auto const brute  = testing::brute_force_census(3);
  CHECK(staged.size() == brute.classes.size());
  CHECK(staged.size() == order3_count);
}

TEST_CASE("order 4 agrees with brute force over normalized table pairs", "[census]") {
  auto const staged = enumerate_semirings(4);
  auto const brute  = testing::brute_force_census(4);
  CHECK(staged.size() == brute.classes.size());
  CHECK(staged.size() == order4_count);
}

TEST_CASE("catalog is sorted by key, valid and duplicate free", "[census]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const catalog = enumerate_semirings(n);
    std::vector<CanonicalKey> keys;
    for (auto const& s : catalog) {
      CHECK(testing::oracle_axioms(s));
      CHECK(s.order() == n);
      keys.push_back(canonical_form(s));
      CHECK(canonical_representative(s) == s);
    }
    CHECK(std::ranges::is_sorted(keys));
    CHECK(std::ranges::adjacent_find(keys) == keys.end());
  }
}

TEST_CASE("known order-4 semirings appear", "[census]") {
  auto const catalog = enumerate_semirings(4);
  auto const b       = boolean_semiring();
  for (auto const& s : {direct_product(b, b), direct_product(zmod(2), zmod(2)), zmod(4), preset("z2x-sq"),
                        direct_product(b, zmod(2))}) {
    CHECK(in_catalog(catalog, s));
  }
}

TEST_CASE("enumeration limits", "[census]") {
  CHECK_THROWS_AS(enumerate_semirings(0), DomainError);
  CHECK_THROWS_AS(enumerate_semirings(5), DomainError);
  CHECK(enumerate_semirings(3, 4, 4).size() == order3_count);
}

TEST_CASE("additive monoids up to isomorphism", "[census]") {
  // Commutative monoids of orders 1..4: 1, 2, 5, 19.
  CHECK(additive_monoids(1).size() == 1);
  CHECK(additive_monoids(2).size() == 2);
  CHECK(additive_monoids(3).size() == 5);
  CHECK(additive_monoids(4).size() == 19);
}

TEST_CASE("scan of order 2", "[census]") {
  ScanOptions opts;
  opts.orders     = {2};
  auto const r    = scan(opts);
  CHECK(r.count_per_order.at(2) == 2);
  CHECK(r.violations.empty());
  CHECK_FALSE(r.aborted);
  CHECK(r.tallies.at(TheoremId::main).confirmed == 2);
  for (auto const& e : r.entries) {
    CHECK(e.verdicts.at(TheoremId::main) == Verdict::confirmed);
    CHECK(e.flags.boolean);
    CHECK(e.flags.commutative);
  }
}

TEST_CASE("trivial semiring is excluded unless asked for", "[census]") {
  ScanOptions opts;
  opts.orders = {1};
  auto r      = scan(opts);
  CHECK(r.entries.empty());
  CHECK(r.count_per_order.at(1) == 0);
  for (auto const& [id, t] : r.tallies) {
    CHECK(t.confirmed + t.vacuous == 0);
  }
  opts.include_trivial = true;
  r                    = scan(opts);
  CHECK(r.entries.size() == 1);
}

TEST_CASE("scan of orders 2 to 4 finds no violation and tallies add up", "[census]") {
  ScanOptions opts;
  opts.orders  = {2, 3, 4};
  auto const r = scan(opts);
  CHECK(r.violations.empty());
  CHECK_FALSE(r.aborted);
  std::size_t total = 0;
  for (auto [order, count] : r.count_per_order) {
    total += count;
  }
  CHECK(total == 2 + order3_count + order4_count);
  for (auto const& [id, t] : r.tallies) {
    CHECK(t.confirmed + t.vacuous == total);
  }
}

TEST_CASE("scan does not depend on the number of workers", "[census]") {
  ScanOptions opts;
  opts.orders    = {2, 3, 4};
  auto const one = scan(opts);
  opts.workers   = 4;
  auto const many = scan(opts);
  REQUIRE(one.entries.size() == many.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    CHECK(one.entries[i].semiring == many.entries[i].semiring);
    CHECK(one.entries[i].verdicts == many.entries[i].verdicts);
  }
  CHECK(one.count_per_order == many.count_per_order);
  for (auto id : all_theorems) {
    CHECK(one.tallies.at(id).confirmed == many.tallies.at(id).confirmed);
  }
}
