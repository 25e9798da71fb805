#ifndef IDEMGEN_FINITE_SEMIRING_HPP_
#define IDEMGEN_FINITE_SEMIRING_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idemgen/element_set.hpp"

namespace idemgen {

  // A finite semiring stored as two Cayley tables over the indices
  // 0, ..., order - 1, with distinguished zero and one and one display
  // label per element.
  //
  // The constructor only checks structure (table shapes, index ranges,
  // distinct labels).  Use FiniteSemiring::validated, or call validate(), to
  // also check the semiring axioms.  Built-in constructors produce tables
  // that are semirings by construction and skip the O(n^3) axiom sweep.
  //
  // By convention the constructors in this library put zero at index 0 and
  // one at index 1; semirings read from files may use any indices.
  class FiniteSemiring {
   public:
    using table_type = std::vector<element_type>;

    FiniteSemiring(std::vector<std::string> labels,
                   table_type               add,
                   table_type               mul,
                   element_type             zero,
                   element_type             one);

    // As the constructor, but throws AxiomError if any axiom fails.
    static FiniteSemiring validated(std::vector<std::string> labels,
                                    table_type               add,
                                    table_type               mul,
                                    element_type             zero,
                                    element_type             one);

    std::size_t order() const noexcept {
      return _order;
    }
    element_type zero() const noexcept {
      return _zero;
    }
    element_type one() const noexcept {
      return _one;
    }

    element_type add(element_type a, element_type b) const noexcept {
      return _add[a * _order + b];
    }
    element_type mul(element_type a, element_type b) const noexcept {
      return _mul[a * _order + b];
    }

    std::span<element_type const> add_table() const noexcept {
      return _add;
    }
    std::span<element_type const> mul_table() const noexcept {
      return _mul;
    }

    std::string const& label(element_type a) const {
      return _labels.at(a);
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::optional<element_type> find(std::string_view label) const;
    // Like find, but throws DomainError naming the unknown label.
    element_type at(std::string_view label) const;

    bool is_trivial() const noexcept {
      return _order == 1;
    }
    bool is_commutative() const noexcept;

    // All elements, i.e. the full ElementSet of this carrier.
    ElementSet elements() const {
      return ElementSet::full(_order);
    }

    friend bool operator==(FiniteSemiring const&, FiniteSemiring const&) = default;

   private:
    std::size_t              _order;
    std::vector<std::string> _labels;
    table_type               _add;
    table_type               _mul;
    element_type             _zero;
    element_type             _one;
  };

  struct AxiomViolation {
    std::string                 axiom;
    std::array<element_type, 3> witness;  // unused slots repeat the last one

    friend bool operator==(AxiomViolation const&, AxiomViolation const&) = default;
  };

  struct AxiomReport {
    bool                        valid = true;
    std::vector<AxiomViolation> violations;
  };

  // Every violated instance of: additive commutativity, associativity and
  // identity; multiplicative associativity and identity; left and right
  // distributivity; left and right annihilation by zero.
  AxiomReport validate(FiniteSemiring const& s);

  // Validation over raw row-major tables.  Non-square tables, out of range
  // entries or constants throw StructureError; axiom failures are reported.
  AxiomReport validate(std::vector<std::vector<int>> const& add,
                       std::vector<std::vector<int>> const& mul,
                       int                                  zero,
                       int                                  one);

}  // namespace idemgen

#endif  // IDEMGEN_FINITE_SEMIRING_HPP_
