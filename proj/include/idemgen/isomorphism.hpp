#ifndef IDEMGEN_ISOMORPHISM_HPP_
#define IDEMGEN_ISOMORPHISM_HPP_

#include <array>
#include <optional>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // Isomorphism-invariant description of one element: preperiod and period
  // of its multiplicative powers and of its additive multiples, and counts of
  // a few table properties.  Elements related by an isomorphism have equal
  // vectors.
  using ElementInvariant = std::array<unsigned, 10>;

  std::vector<ElementInvariant> element_invariants(FiniteSemiring const& s);

  // A bijection phi (phi[a] is the image of a) with phi(a + b) = phi(a) +
  // phi(b), phi(ab) = phi(a)phi(b), phi(0) = 0 and phi(1) = 1, or nothing.
  std::optional<std::vector<element_type>> isomorphic(FiniteSemiring const& s,
                                                      FiniteSemiring const& t);

  // True if phi is a bijection from s onto t preserving both operations and
  // both constants.
  bool is_isomorphism(FiniteSemiring const&            s,
                      FiniteSemiring const&            t,
                      std::vector<element_type> const& phi);

  // Renames the elements of s so that a becomes perm[a].
  FiniteSemiring relabel(FiniteSemiring const& s, std::vector<element_type> const& perm);

}  // namespace idemgen

#endif  // IDEMGEN_ISOMORPHISM_HPP_
