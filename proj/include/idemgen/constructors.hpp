#ifndef IDEMGEN_CONSTRUCTORS_HPP_
#define IDEMGEN_CONSTRUCTORS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // Default bound on the number of elements of a matrix or triangular
  // semiring.
  inline constexpr std::size_t default_size_cap = 4096;

  // {0}, with 0 = 1.
  FiniteSemiring trivial_semiring();

  // {0, 1} with 1 + 1 = 1.
  FiniteSemiring boolean_semiring();

  // Integers modulo n; n = 1 gives the trivial semiring.  Throws DomainError
  // for n = 0.
  FiniteSemiring zmod(unsigned n);

  // Z_n[x] / (modulus) where base must be (a relabeling-free copy of) zmod(n)
  // and modulus lists coefficients in increasing degree, monic, of degree at
  // least 1.  Element labels are polynomials such as "2+x" or "1+2x^2".
  FiniteSemiring poly_quotient(FiniteSemiring const& base, std::vector<unsigned> const& modulus);

  // All n x n matrices over s, and the upper triangular ones.  Labels look
  // like "[1 1;0 0]".  Throws DomainError when the element count would exceed
  // cap or n = 0.
  FiniteSemiring matrix_semiring(FiniteSemiring const& s,
                                 unsigned              n,
                                 std::size_t           cap = default_size_cap);
  FiniteSemiring triangular_semiring(FiniteSemiring const& s,
                                     unsigned              n,
                                     std::size_t           cap = default_size_cap);

  // Pairs with componentwise operations; labels are "(a,b)".
  FiniteSemiring direct_product(FiniteSemiring const& s, FiniteSemiring const& t);

  // Finite presets by name: bool, zmod:N, t2b, m2z2, z2x-sq, z3x-sqm1,
  // bxy-presentation, product:A,B, matrix:N,A, triangular:N,A.  A preset
  // argument containing a comma may be wrapped in parentheses, e.g.
  // "product:bool,(product:bool,bool)".  Throws DomainError for unknown names.
  FiniteSemiring preset(std::string_view name);

  // Names accepted by preset() that take no arguments, plus the symbolic
  // models "nat" and "nn-triple" (which preset() rejects).
  std::vector<std::string> preset_names();

  bool is_symbolic_preset(std::string_view name);

}  // namespace idemgen

#endif  // IDEMGEN_CONSTRUCTORS_HPP_
