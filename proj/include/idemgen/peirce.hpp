#ifndef IDEMGEN_PEIRCE_HPP_
#define IDEMGEN_PEIRCE_HPP_

#include <string_view>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  enum class FactorClass {
    iso_to_boolean,
    iso_to_z2,
    other_no_nontrivial_idempotents,
    other
  };

  std::string_view to_string(FactorClass c);

  // Decomposition of a commutative semiring along its primitive idempotents
  // e_1, ..., e_k: factor i is e_i S with zero 0 and identity e_i, and
  // iso[s] = (e_1 s, ..., e_k s) where each coordinate is an index into the
  // matching factor.
  struct PeirceResult {
    std::vector<element_type>              primitives;
    std::vector<FiniteSemiring>            factors;
    std::vector<std::vector<element_type>> iso;
    std::vector<FactorClass>               factor_classification;
    // carriers[i][j] is the element of S that factor i stores at index j.
    std::vector<std::vector<element_type>> carriers;
  };

  // Requires s commutative with every idempotent having an orthogonal
  // complement; throws DomainError naming a non-commuting pair or an
  // idempotent without a complement otherwise.  Throws InternalError if the
  // primitives fail to be orthogonal, sum to 1, or yield an isomorphism.
  PeirceResult peirce_decompose(FiniteSemiring const& s);

  FactorClass classify_factor(FiniteSemiring const& factor);

}  // namespace idemgen

#endif  // IDEMGEN_PEIRCE_HPP_
