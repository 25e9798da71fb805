#include "idemgen/closure.hpp"

#include "idemgen/classify.hpp"
#include "idemgen/errors.hpp"

namespace idemgen {

  std::string_view to_string(GenerationMode m) {
    return m == GenerationMode::multiplicative ? "multiplicative" : "additive";
  }

  std::string_view to_string(GeneratorClass g) {
    return g == GeneratorClass::idempotents ? "idempotents" : "nilidempotents";
  }

  namespace {

    element_type apply(FiniteSemiring const& s, GenerationMode m, element_type a, element_type b) {
      return m == GenerationMode::multiplicative ? s.mul(a, b) : s.add(a, b);
    }

    // Breadth-first extension of words on the right by one generator.  Every
    // element of the closure is a word over g, so this reaches all of it, and
    // the first visit to an element uses a shortest word.
    template <typename Visit>
    ElementSet bfs_closure(FiniteSemiring const& s,
                           GenerationMode        m,
                           ElementSet const&     g,
                           Visit&&               visit) {
      if (g.carrier_order() != s.order()) {
        throw DomainError("generator set does not index this semiring");
      }
      ElementSet                reached(s.order());
      std::vector<element_type> frontier;
      auto const                gens = g.members();
      for (auto a : gens) {
        reached.insert(a);
        frontier.push_back(a);
        visit(a, a, a, true);
      }
      while (!frontier.empty()) {
        std::vector<element_type> next;
        for (auto a : frontier) {
          for (auto h : gens) {
            auto c = apply(s, m, a, h);
            if (!reached.contains(c)) {
              reached.insert(c);
              next.push_back(c);
              visit(c, a, h, false);
            }
          }
        }
        frontier = std::move(next);
      }
      return reached;
    }

  }  // namespace

  ElementSet mult_closure(FiniteSemiring const& s, ElementSet const& g) {
    return bfs_closure(s, GenerationMode::multiplicative, g, [](auto...) {});
  }

  ElementSet add_closure(FiniteSemiring const& s, ElementSet const& g) {
    return bfs_closure(s, GenerationMode::additive, g, [](auto...) {});
  }

  element_type evaluate_word(FiniteSemiring const&            s,
                             GenerationMode                   mode,
                             std::vector<element_type> const& word) {
    if (word.empty()) {
      return mode == GenerationMode::multiplicative ? s.one() : s.zero();
    }
    element_type acc = word.front();
    for (std::size_t i = 1; i < word.size(); ++i) {
      acc = apply(s, mode, acc, word[i]);
    }
    return acc;
  }

  GenerationCertificate generation_certificate(FiniteSemiring const& s,
                                               GenerationMode        mode,
                                               GeneratorClass        generator_class) {
    auto const classes = element_classes(s);
    auto const& gens   = generator_class == GeneratorClass::idempotents
                             ? classes.idempotents
                             : classes.nilidempotents;

    GenerationCertificate cert{mode, generator_class, false, {}, ElementSet(s.order())};
    auto                  reached
        = bfs_closure(s, mode, gens, [&](element_type c, element_type prefix, element_type h, bool seed) {
            if (seed) {
              cert.expressions[c] = {c};
            } else {
              auto word = cert.expressions.at(prefix);
              word.push_back(h);
              cert.expressions[c] = std::move(word);
            }
          });
    cert.uncovered = reached.complement();
    cert.generated = cert.uncovered.empty();
    return cert;
  }

}  // namespace idemgen
