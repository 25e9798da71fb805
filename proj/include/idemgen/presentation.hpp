#ifndef IDEMGEN_PRESENTATION_HPP_
#define IDEMGEN_PRESENTATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // A term over named generators, 0, 1, + and *.
  struct Term {
    enum class Kind { zero, one, generator, sum, product };

    Kind              kind;
    std::string       name;  // generator name
    std::vector<Term> args;  // two operands for sum and product

    static Term zero() {
      return {Kind::zero, {}, {}};
    }
    static Term one() {
      return {Kind::one, {}, {}};
    }
    static Term gen(std::string name) {
      return {Kind::generator, std::move(name), {}};
    }
    friend Term operator+(Term a, Term b) {
      return {Kind::sum, {}, {std::move(a), std::move(b)}};
    }
    friend Term operator*(Term a, Term b) {
      return {Kind::product, {}, {std::move(a), std::move(b)}};
    }
  };

  std::string to_string(Term const& t);

  // Grammar: sum := product ('+' product)*, product := power ('*' power)*,
  // power := atom ('^' digits)?, atom := '0' | '1' | identifier | '(' sum ')'.
  // Throws DomainError on malformed input.
  Term parse_term(std::string_view text);

  struct Relation {
    Term lhs;
    Term rhs;
  };

  // "lhs = rhs".
  Relation parse_relation(std::string_view text);

  enum class PresentationStatus { finite, exceeds_bound };

  std::string_view to_string(PresentationStatus s);

  struct PresentationResult {
    PresentationStatus            status;
    std::optional<FiniteSemiring> semiring;
    // Generators whose class contains an earlier element (0, 1, another
    // generator, or a term built before it), with that element's label.
    std::vector<std::pair<std::string, std::string>> collapsed_generators;
    std::map<std::string, element_type>              generator_images;
    std::size_t                                      universe_bound;
  };

  inline constexpr std::size_t default_universe_bound = 64;

  // Quotient of the free semiring on `generators` (with a + a = a imposed when
  // additively_idempotent) by the congruence generated by `relations`.
  //
  // Classes of terms are built breadth first: undefined sums and products of
  // existing classes become new classes, and the semiring axioms, the
  // relations and congruence are applied to merge classes until every sum and
  // product is defined.  If that needs more than universe_bound live classes
  // the result is exceeds_bound.  Throws DomainError if universe_bound < 2 or
  // a relation names an unknown generator.
  PresentationResult presentation(std::vector<std::string> const& generators,
                                  std::vector<Relation> const&    relations,
                                  bool                            additively_idempotent,
                                  std::size_t universe_bound = default_universe_bound);

  // Evaluates t in s with the given generator images.
  element_type evaluate(FiniteSemiring const&                      s,
                        Term const&                                t,
                        std::map<std::string, element_type> const& images);

  // B[x, y]: additively idempotent, x + y = xy = yx = x^2 = y^2 = 0.
  PresentationResult bxy_presentation(std::size_t universe_bound = default_universe_bound);

}  // namespace idemgen

#endif  // IDEMGEN_PRESENTATION_HPP_
