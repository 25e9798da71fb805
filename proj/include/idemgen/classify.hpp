#ifndef IDEMGEN_CLASSIFY_HPP_
#define IDEMGEN_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "idemgen/element_set.hpp"
#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // The distinguished subsets of a finite semiring S:
  //   idempotents    I(S)  = {e : e^2 = e}
  //   nilpotents     Nil(S) = {x : x^k = 0 for some k >= 1}
  //   nilidempotents {e : e^2 = e + x for some nilpotent x}
  //   additively_invertible V(S), center Z(S), units S*.
  // Witness vectors are indexed by element and empty where not applicable.
  struct ClassReport {
    ElementSet idempotents;
    ElementSet nilpotents;
    ElementSet nilidempotents;
    ElementSet additively_invertible;
    ElementSet center;
    ElementSet units;

    std::vector<std::optional<element_type>> additive_inverse;
    std::vector<std::optional<element_type>> unit_inverse;
    std::vector<std::optional<unsigned>>     nilpotency_index;

    bool is_boolean() const {
      return idempotents.is_full();
    }
    bool is_commutative() const {
      return center.is_full();
    }
    // Nil(S) is contained in Z(S).
    bool nil_in_center() const {
      return nilpotents.is_subset_of(center);
    }
    // Nil(S) is contained in V(S) and Z(S).
    bool nil_in_invertible_center() const {
      return nilpotents.is_subset_of(center & additively_invertible);
    }
  };

  ClassReport element_classes(FiniteSemiring const& s);

  // a^k, with a^0 = one.
  element_type power(FiniteSemiring const& s, element_type a, std::size_t k);

  // a + a + ... + a with n summands; n = 0 gives zero.
  element_type scalar_repeat(FiniteSemiring const& s, std::size_t n, element_type a);

  // The unique b with a + b = zero, if any.
  std::optional<element_type> additive_inverse(FiniteSemiring const& s, element_type a);

  // The least k >= 1 with a^k = zero.  The power sequence a, a^2, ... is
  // eventually periodic with preperiod plus period at most order, so looking
  // at the first order powers decides nilpotency.
  std::optional<unsigned> nilpotency_index(FiniteSemiring const& s, element_type a);

  inline bool is_nilpotent(FiniteSemiring const& s, element_type a) {
    return nilpotency_index(s, a).has_value();
  }

  inline bool is_idempotent(FiniteSemiring const& s, element_type e) {
    return s.mul(e, e) == e;
  }

  // Smallest-index nilpotent x with e^2 = e + x.
  std::optional<element_type> nilidempotent_defect(FiniteSemiring const& s, element_type e);

  bool is_nilidempotent(FiniteSemiring const& s, element_type e);

  bool is_central(FiniteSemiring const& s, element_type a);

}  // namespace idemgen

#endif  // IDEMGEN_CLASSIFY_HPP_
