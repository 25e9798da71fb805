#ifndef IDEMGEN_LIFT_HPP_
#define IDEMGEN_LIFT_HPP_

#include <cstddef>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // One round of the lifting recurrence.  Starting from g_k^2 = g_k + z_k:
  //
  //   w_{k+1} = z_k + 2 g_k (-z_k)
  //   g_{k+1} = g_k + w_{k+1}
  //   z_{k+1} = 4 z_k^3 + 3 (-z_k^2)
  //
  // where -a is the additive inverse and integer coefficients are repeated
  // addition.
  struct LiftStep {
    element_type g;
    element_type z;
    element_type w;

    friend bool operator==(LiftStep const&, LiftStep const&) = default;
  };

  struct LiftTrace {
    element_type          g0;
    element_type          z0;
    std::vector<LiftStep> steps;
    element_type          f;           // idempotent
    element_type          correction;  // sum of the w's, nilpotent
    std::size_t           iterations;
  };

  // Lifts a nilidempotent g to an idempotent f = g + n with n nilpotent.
  //
  // Defects z (nilpotent, g^2 = g + z, additively invertible and central) are
  // tried in index order.  A run that has not reached z = 0 after
  // ceil(log2(nilpotency index of z)) + 2 rounds throws InternalError, since
  // z_{k+1} is a multiple of z^(2^k).
  //
  // Throws DomainError if g is not nilidempotent, PreconditionError if no
  // defect is additively invertible and central.
  LiftTrace lift_nilidempotent(FiniteSemiring const& s, element_type g);

  // Maximum number of rounds allowed for a defect of the given nilpotency
  // index.
  std::size_t lift_iteration_cap(unsigned nilpotency_index);

  // The inverse of 1 + x for x nilpotent and additively invertible:
  //   (1 + (-x)) (1 + x^2) (1 + x^4) ... (1 + x^(2^(k-1)))
  // with k = max(1, ceil(log2(nilpotency index))).  Throws DomainError if x is
  // not nilpotent or has no additive inverse; the result is checked to be a
  // two-sided inverse (InternalError otherwise).
  element_type invert_unipotent(FiniteSemiring const& s, element_type x);

}  // namespace idemgen

#endif  // IDEMGEN_LIFT_HPP_
