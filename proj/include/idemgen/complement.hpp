#ifndef IDEMGEN_COMPLEMENT_HPP_
#define IDEMGEN_COMPLEMENT_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  enum class ComplementKind { orthogonal, nilorthogonal };

  std::string_view to_string(ComplementKind k);

  // orthogonal:    f idempotent, e + f = 1, ef = fe = 0, x = 0.
  // nilorthogonal: f nilidempotent, x nilpotent, e + f = 1 + x,
  //                ef and fe nilpotent.
  struct ComplementWitness {
    element_type   e;
    element_type   f;
    ComplementKind kind;
    element_type   x;

    friend bool operator==(ComplementWitness const&, ComplementWitness const&) = default;
  };

  // Checks the defining conditions of a witness against the tables.
  bool is_valid_witness(FiniteSemiring const& s, ComplementWitness const& w);

  // Smallest-index orthogonal complement of the idempotent e.  Throws
  // DomainError if e is not idempotent.
  std::optional<ComplementWitness> orthogonal_complement(FiniteSemiring const& s, element_type e);

  // First (f, x) in lexicographic index order.  Throws DomainError if e is
  // not idempotent.
  std::optional<ComplementWitness> nilorthogonal_complement(FiniteSemiring const& s,
                                                            element_type          e);

  // Every nilorthogonal (f, x) pair for e, in lexicographic index order.
  std::vector<ComplementWitness> all_nilorthogonal_complements(FiniteSemiring const& s,
                                                               element_type          e);

  // All sets of nonzero mutually orthogonal idempotents of size at most
  // max_len summing to b.  Each set is sorted by index; the list is in
  // lexicographic order.
  std::vector<std::vector<element_type>>
  orthogonal_decompositions(FiniteSemiring const& s, element_type b, std::size_t max_len);

}  // namespace idemgen

#endif  // IDEMGEN_COMPLEMENT_HPP_
