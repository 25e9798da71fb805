#ifndef IDEMGEN_CLOSURE_HPP_
#define IDEMGEN_CLOSURE_HPP_

#include <map>
#include <string_view>
#include <vector>

#include "idemgen/element_set.hpp"
#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  enum class GenerationMode { multiplicative, additive };
  enum class GeneratorClass { idempotents, nilidempotents };

  std::string_view to_string(GenerationMode m);
  std::string_view to_string(GeneratorClass g);

  // Least superset of g closed under multiplication (resp. addition).
  ElementSet mult_closure(FiniteSemiring const& s, ElementSet const& g);
  ElementSet add_closure(FiniteSemiring const& s, ElementSet const& g);

  struct GenerationCertificate {
    GenerationMode mode;
    GeneratorClass generator_class;
    bool           generated;
    // For each reached element, a shortest word over the generator class
    // whose product (resp. sum) is that element.
    std::map<element_type, std::vector<element_type>> expressions;
    ElementSet                                        uncovered;
  };

  GenerationCertificate generation_certificate(FiniteSemiring const& s,
                                               GenerationMode        mode,
                                               GeneratorClass        generator_class);

  // Evaluates a word as a product or a sum.
  element_type evaluate_word(FiniteSemiring const&            s,
                             GenerationMode                   mode,
                             std::vector<element_type> const& word);

}  // namespace idemgen

#endif  // IDEMGEN_CLOSURE_HPP_
