#ifndef IDEMGEN_CENSUS_HPP_
#define IDEMGEN_CENSUS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idemgen/canonical.hpp"
#include "idemgen/finite_semiring.hpp"
#include "idemgen/theorem.hpp"

namespace idemgen {

  inline constexpr std::size_t default_max_order = 4;

  // All semirings of the given order up to isomorphism, as canonical
  // representatives sorted by CanonicalKey.
  //
  // Additive monoids (S, +, 0) are enumerated first and reduced up to
  // isomorphism; for each one and each choice of the identity 1,
  // multiplication tables are filled cell by cell, pruning on every
  // associativity and distributivity instance whose cells are all known.
  // Work is split across `workers` threads by additive monoid; the result does
  // not depend on the number of workers.
  //
  // Throws DomainError if order is 0 or above max_order.
  std::vector<FiniteSemiring> enumerate_semirings(std::size_t order,
                                                  std::size_t max_order = default_max_order,
                                                  unsigned    workers   = 1);

  // Commutative monoid tables with identity 0 on {0, ..., order - 1}, one per
  // isomorphism class.
  std::vector<FiniteSemiring::table_type> additive_monoids(std::size_t order);

  struct SemiringFlags {
    bool boolean;
    bool commutative;
    bool mult_generated_by_idempotents;
    bool mult_generated_by_nilidempotents;
    bool add_generated_by_idempotents;
    bool orthogonal_complements;
    bool nilorthogonal_complements;
    bool nil_in_center;
    bool nil_in_invertible_center;
  };

  SemiringFlags semiring_flags(FiniteSemiring const& s);

  struct ScanEntry {
    FiniteSemiring                semiring;
    SemiringFlags                 flags;
    std::map<TheoremId, Verdict>  verdicts;
  };

  struct Tally {
    std::size_t confirmed = 0;
    std::size_t vacuous   = 0;
  };

  struct ScanViolation {
    TheoremReport report;
    std::string   serialized;  // the semiring in SemiringFile format
  };

  struct ScanOptions {
    std::vector<std::size_t> orders;
    std::vector<TheoremId>   theorems{all_theorems.begin(), all_theorems.end()};
    bool                     include_trivial = false;
    unsigned                 workers         = 1;
    std::size_t              max_order       = default_max_order;
  };

  struct ScanReport {
    std::vector<std::size_t>           orders;
    std::map<std::size_t, std::size_t> count_per_order;
    std::vector<ScanEntry>             entries;
    std::map<TheoremId, Tally>         tallies;
    std::vector<ScanViolation>         violations;
    bool                               aborted = false;
  };

  // Runs check_theorem over the catalog of each order.  The first violation
  // stops the scan (aborted = true) with the offending semiring serialized.
  ScanReport scan(ScanOptions const& options);

}  // namespace idemgen

#endif  // IDEMGEN_CENSUS_HPP_
