#include "idemgen/theorem.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "idemgen/classify.hpp"
#include "idemgen/closure.hpp"
#include "idemgen/complement.hpp"
#include "idemgen/errors.hpp"

namespace idemgen {

  std::string_view to_string(TheoremId id) {
    switch (id) {
      case TheoremId::main:
        return "main";
      case TheoremId::main2:
        return "main2";
      case TheoremId::mainnilid:
        return "mainnilid";
      case TheoremId::additivecom:
        break;
    }
    return "additivecom";
  }

  TheoremId parse_theorem_id(std::string_view name) {
    for (auto id : all_theorems) {
      if (to_string(id) == name) {
        return id;
      }
    }
    throw DomainError(fmt::format("unknown theorem '{}' (expected main, main2, mainnilid or "
                                  "additivecom)",
                                  name));
  }

  std::string_view to_string(Verdict v) {
    switch (v) {
      case Verdict::confirmed:
        return "confirmed";
      case Verdict::vacuous:
        return "vacuous";
      case Verdict::violation:
        break;
    }
    return "violation";
  }

  namespace {

    Condition const* find_condition(std::vector<Condition> const& list, std::string_view name) {
      auto it = std::find_if(list.begin(), list.end(),
                             [name](Condition const& c) { return c.name == name; });
      return it == list.end() ? nullptr : &*it;
    }

    Condition generated(FiniteSemiring const& s,
                        std::string_view      name,
                        GenerationMode        mode,
                        GeneratorClass        gens) {
      auto cert = generation_certificate(s, mode, gens);
      Condition c{std::string(name), cert.generated, {}};
      if (!cert.generated) {
        c.witness.push_back(cert.uncovered.members().front());
      }
      return c;
    }

    Condition complements(FiniteSemiring const& s, ClassReport const& cls, ComplementKind kind) {
      Condition c{std::string(kind == ComplementKind::orthogonal
                                  ? condition::orthogonal_complements
                                  : condition::nilorthogonal_complements),
                  true,
                  {}};
      for (auto e : cls.idempotents.members()) {
        bool ok = kind == ComplementKind::orthogonal ? orthogonal_complement(s, e).has_value()
                                                     : nilorthogonal_complement(s, e).has_value();
        if (!ok) {
          c.holds   = false;
          c.witness = {e};
          break;
        }
      }
      return c;
    }

    Condition nil_subset(std::string_view name, ClassReport const& cls, ElementSet const& target) {
      Condition c{std::string(name), true, {}};
      auto      outside = cls.nilpotents & target.complement();
      if (!outside.empty()) {
        c.holds   = false;
        c.witness = {outside.members().front()};
      }
      return c;
    }

    Condition commutative(FiniteSemiring const& s) {
      Condition c{std::string(condition::commutative), true, {}};
      for (std::size_t i = 0; i < s.order() && c.holds; ++i) {
        for (std::size_t j = i + 1; j < s.order(); ++j) {
          auto const a = static_cast<element_type>(i);
          auto const b = static_cast<element_type>(j);
          if (s.mul(a, b) != s.mul(b, a)) {
            c.holds   = false;
            c.witness = {a, b};
            break;
          }
        }
      }
      return c;
    }

    Condition boolean(ClassReport const& cls) {
      Condition c{std::string(condition::boolean), cls.is_boolean(), {}};
      if (!c.holds) {
        c.witness = {cls.idempotents.complement().members().front()};
      }
      return c;
    }

  }  // namespace

  Condition const* TheoremReport::hypothesis(std::string_view name) const {
    return find_condition(hypotheses, name);
  }

  Condition const* TheoremReport::conclusion(std::string_view name) const {
    return find_condition(conclusions, name);
  }

  TheoremReport check_theorem(FiniteSemiring const& s, TheoremId id) {
    auto const    cls = element_classes(s);
    TheoremReport r{id, {}, {}, Verdict::confirmed};
    auto const    v_and_z = cls.additively_invertible & cls.center;

    switch (id) {
      case TheoremId::main:
        r.hypotheses.push_back(generated(s, condition::mult_gen_idempotents,
                                         GenerationMode::multiplicative,
                                         GeneratorClass::idempotents));
        r.hypotheses.push_back(complements(s, cls, ComplementKind::orthogonal));
        break;
      case TheoremId::main2:
        r.hypotheses.push_back(generated(s, condition::mult_gen_idempotents,
                                         GenerationMode::multiplicative,
                                         GeneratorClass::idempotents));
        r.hypotheses.push_back(complements(s, cls, ComplementKind::nilorthogonal));
        r.hypotheses.push_back(nil_subset(condition::nil_in_v_and_z, cls, v_and_z));
        break;
      case TheoremId::mainnilid:
        r.hypotheses.push_back(generated(s, condition::mult_gen_nilidempotents,
                                         GenerationMode::multiplicative,
                                         GeneratorClass::nilidempotents));
        r.hypotheses.push_back(complements(s, cls, ComplementKind::nilorthogonal));
        r.hypotheses.push_back(nil_subset(condition::nil_in_v_and_z, cls, v_and_z));
        break;
      case TheoremId::additivecom:
        r.hypotheses.push_back(generated(s, condition::add_gen_idempotents,
                                         GenerationMode::additive,
                                         GeneratorClass::idempotents));
        r.hypotheses.push_back(complements(s, cls, ComplementKind::orthogonal));
        r.hypotheses.push_back(nil_subset(condition::nil_in_z, cls, cls.center));
        break;
    }

    r.conclusions.push_back(commutative(s));
    if (id == TheoremId::main || id == TheoremId::main2) {
      r.conclusions.push_back(boolean(cls));
    }

    auto holds = [](Condition const& c) { return c.holds; };
    if (!std::all_of(r.hypotheses.begin(), r.hypotheses.end(), holds)) {
      r.verdict = Verdict::vacuous;
    } else if (!std::all_of(r.conclusions.begin(), r.conclusions.end(), holds)) {
      r.verdict = Verdict::violation;
    }
    return r;
  }

  TheoremReport check_theorem(FiniteSemiring const& s, std::string_view id) {
    return check_theorem(s, parse_theorem_id(id));
  }

}  // namespace idemgen
