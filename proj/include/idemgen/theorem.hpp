#ifndef IDEMGEN_THEOREM_HPP_
#define IDEMGEN_THEOREM_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // The four implications checked by check_theorem:
  //
  //   main        mult. generated by idempotents, orthogonal complements
  //               => commutative and Boolean
  //   main2       mult. generated by idempotents, nilorthogonal complements,
  //               Nil in V and Z  => commutative and Boolean
  //   mainnilid   mult. generated by nilidempotents, nilorthogonal
  //               complements, Nil in V and Z  => commutative
  //   additivecom add. generated by idempotents, orthogonal complements,
  //               Nil in Z  => commutative
  enum class TheoremId { main, main2, mainnilid, additivecom };

  inline constexpr std::array<TheoremId, 4> all_theorems{
      TheoremId::main, TheoremId::main2, TheoremId::mainnilid, TheoremId::additivecom};

  std::string_view to_string(TheoremId id);
  // Throws DomainError for an unknown name.
  TheoremId parse_theorem_id(std::string_view name);

  enum class Verdict { confirmed, vacuous, violation };

  std::string_view to_string(Verdict v);

  // Hypothesis and conclusion names used in reports.
  namespace condition {
    inline constexpr std::string_view mult_gen_idempotents    = "mult-generated by idempotents";
    inline constexpr std::string_view mult_gen_nilidempotents = "mult-generated by nilidempotents";
    inline constexpr std::string_view add_gen_idempotents     = "add-generated by idempotents";
    inline constexpr std::string_view orthogonal_complements  = "orthogonal complements";
    inline constexpr std::string_view nilorthogonal_complements = "nilorthogonal complements";
    inline constexpr std::string_view nil_in_v_and_z          = "Nil ⊆ V ∩ Z";
    inline constexpr std::string_view nil_in_z                = "Nil ⊆ Z";
    inline constexpr std::string_view commutative             = "commutative";
    inline constexpr std::string_view boolean                 = "Boolean";
  }  // namespace condition

  // A failing condition carries the elements that witness the failure: an
  // uncovered element, an idempotent without complement, a nilpotent outside
  // V or Z, a non-commuting pair, a non-idempotent.
  struct Condition {
    std::string               name;
    bool                      holds;
    std::vector<element_type> witness;
  };

  struct TheoremReport {
    TheoremId              theorem;
    std::vector<Condition> hypotheses;
    std::vector<Condition> conclusions;
    Verdict                verdict;

    Condition const* hypothesis(std::string_view name) const;
    Condition const* conclusion(std::string_view name) const;
  };

  TheoremReport check_theorem(FiniteSemiring const& s, TheoremId id);
  TheoremReport check_theorem(FiniteSemiring const& s, std::string_view id);

}  // namespace idemgen

#endif  // IDEMGEN_THEOREM_HPP_
