#ifndef IDEMGEN_CANONICAL_HPP_
#define IDEMGEN_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // Byte string identifying a semiring up to isomorphism: the order followed
  // by the addition and multiplication tables (row-major, two bytes per
  // entry) under the least relabeling among those allowed by the canonical
  // colouring (see canonical_labeling).
  struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;

    friend bool operator==(CanonicalKey const&, CanonicalKey const&) = default;
    friend auto operator<=>(CanonicalKey const&, CanonicalKey const&) = default;
  };

  // Upper bound on relabelings tried by canonical_labeling.
  inline constexpr std::size_t max_canonical_candidates = 5'000'000;

  // A relabeling perm (element a goes to perm[a]) that yields the canonical
  // key.  Elements are first coloured by their invariant vectors, refined by
  // the colours of their sums and products with every other element until
  // stable.  Zero goes to 0, one to 1, and the rest are grouped by colour;
  // the lexicographically least pair of tables over all relabelings with
  // that grouping is chosen.  Throws DomainError if the colour classes admit
  // more than max_canonical_candidates relabelings.
  std::vector<element_type> canonical_labeling(FiniteSemiring const& s);

  CanonicalKey canonical_form(FiniteSemiring const& s);

  // s relabeled by canonical_labeling, with labels "0", "1", "2", ...
  FiniteSemiring canonical_representative(FiniteSemiring const& s);

  // Table bytes of s as stored, without any relabeling.
  CanonicalKey table_bytes(FiniteSemiring const& s);

}  // namespace idemgen

#endif  // IDEMGEN_CANONICAL_HPP_
