#include "idemgen/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "idemgen/census.hpp"
#include "idemgen/classify.hpp"
#include "idemgen/closure.hpp"
#include "idemgen/complement.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/errors.hpp"
#include "idemgen/isomorphism.hpp"
#include "idemgen/lift.hpp"
#include "idemgen/peirce.hpp"
#include "idemgen/semiring_file.hpp"
#include "idemgen/symbolic.hpp"
#include "idemgen/theorem.hpp"

namespace idemgen {

  namespace {

    struct Options {
      std::string              file;
      std::string              preset;
      bool                     json_output = false;
      std::string              element;
      std::string              theorem = "all";
      std::size_t              max_order       = default_max_order;
      bool                     include_trivial = false;
      std::string              mode            = "mult";
      std::string              generators      = "idempotents";
      std::string              kind            = "orthogonal";
      bool                     all             = false;
      std::size_t              max_len         = 0;
      std::string              other_file;
      std::string              other_preset;
      std::string              output;
      unsigned                 workers = 1;
      bool                     list    = false;
    };

    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError(0, 0, fmt::format("cannot read '{}'", path));
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    FiniteSemiring load(std::string const& file, std::string const& preset_name) {
      if (!file.empty() && !preset_name.empty()) {
        throw UsageError("--file and --preset are mutually exclusive");
      }
      if (!file.empty()) {
        return parse_semiring_file(read_file(file));
      }
      if (!preset_name.empty()) {
        return preset(preset_name);
      }
      throw UsageError("an input is required: --file PATH or --preset NAME");
    }

    json input_descriptor(Options const& o) {
      json j = json::object();
      if (!o.file.empty()) {
        j["file"] = o.file;
      } else if (!o.preset.empty()) {
        j["preset"] = o.preset;
      } else {
        return nullptr;
      }
      return j;
    }

    json labels_of(FiniteSemiring const& s, ElementSet const& set) {
      json out = json::array();
      set.for_each([&](element_type a) { out.push_back(s.label(a)); });
      return out;
    }

    json labels_of(FiniteSemiring const& s, std::vector<element_type> const& v) {
      json out = json::array();
      for (auto a : v) {
        out.push_back(s.label(a));
      }
      return out;
    }

    element_type element_arg(FiniteSemiring const& s, Options const& o) {
      if (o.element.empty()) {
        throw UsageError("--element LABEL is required");
      }
      return s.at(o.element);
    }

    std::vector<TheoremId> theorem_args(Options const& o) {
      if (o.theorem == "all") {
        return {all_theorems.begin(), all_theorems.end()};
      }
      return {parse_theorem_id(o.theorem)};
    }

    json condition_json(std::string_view name, bool holds, json witness) {
      json j;
      j["name"]    = name;
      j["holds"]   = holds;
      j["witness"] = std::move(witness);
      return j;
    }

    json theorem_json(FiniteSemiring const& s, TheoremReport const& r) {
      json j;
      j["theorem"] = to_string(r.theorem);
      j["verdict"] = to_string(r.verdict);
      for (auto const* part : {&r.hypotheses, &r.conclusions}) {
        json list = json::array();
        for (auto const& c : *part) {
          list.push_back(condition_json(c.name, c.holds, labels_of(s, c.witness)));
        }
        j[part == &r.hypotheses ? "hypotheses" : "conclusions"] = std::move(list);
      }
      return j;
    }

    ReportVerdict combine(std::vector<Verdict> const& verdicts) {
      if (std::ranges::count(verdicts, Verdict::violation) > 0) {
        return ReportVerdict::violation;
      }
      if (std::ranges::all_of(verdicts, [](Verdict v) { return v == Verdict::confirmed; })) {
        return ReportVerdict::confirmed;
      }
      return ReportVerdict::vacuous;
    }

    json classes_json(FiniteSemiring const& s) {
      auto const cls = element_classes(s);
      json       j;
      j["order"]          = s.order();
      j["elements"]       = s.labels();
      j["zero"]           = s.label(s.zero());
      j["one"]            = s.label(s.one());
      j["idempotents"]    = labels_of(s, cls.idempotents);
      j["nilpotents"]     = labels_of(s, cls.nilpotents);
      j["nilidempotents"] = labels_of(s, cls.nilidempotents);
      j["center"]         = labels_of(s, cls.center);
      json inverses       = json::object();
      json units          = json::object();
      json index          = json::object();
      for (auto a : s.elements().members()) {
        if (cls.additive_inverse[a]) {
          inverses[s.label(a)] = s.label(*cls.additive_inverse[a]);
        }
        if (cls.unit_inverse[a]) {
          units[s.label(a)] = s.label(*cls.unit_inverse[a]);
        }
        if (cls.nilpotency_index[a]) {
          index[s.label(a)] = *cls.nilpotency_index[a];
        }
      }
      j["additively_invertible"] = std::move(inverses);
      j["units"]                 = std::move(units);
      j["nilpotency_index"]      = std::move(index);
      j["boolean"]               = cls.is_boolean();
      j["commutative"]           = cls.is_commutative();
      j["nil_in_center"]         = cls.nil_in_center();
      j["nil_in_invertible_center"] = cls.nil_in_invertible_center();
      return j;
    }

    json witness_json(FiniteSemiring const& s, ComplementWitness const& w) {
      json j;
      j["e"]    = s.label(w.e);
      j["f"]    = s.label(w.f);
      j["kind"] = to_string(w.kind);
      j["x"]    = s.label(w.x);
      return j;
    }

    json flags_json(SemiringFlags const& f) {
      json j;
      j["boolean"]                          = f.boolean;
      j["commutative"]                      = f.commutative;
      j["mult_generated_by_idempotents"]    = f.mult_generated_by_idempotents;
      j["mult_generated_by_nilidempotents"] = f.mult_generated_by_nilidempotents;
      j["add_generated_by_idempotents"]     = f.add_generated_by_idempotents;
      j["orthogonal_complements"]           = f.orthogonal_complements;
      j["nilorthogonal_complements"]        = f.nilorthogonal_complements;
      j["nil_in_center"]                    = f.nil_in_center;
      j["nil_in_invertible_center"]         = f.nil_in_invertible_center;
      return j;
    }

    // Symbolic models.  Both have finitely many idempotents, closed under
    // multiplication, and Nil = {0}; nilidempotents therefore coincide with
    // idempotents and every complement search is a finite search over them.
    template <typename Model>
    std::optional<typename Model::element> symbolic_complement(Model const&                                 m,
                                                               std::vector<typename Model::element> const& idem,
                                                               typename Model::element const&              e) {
      for (auto const& f : idem) {
        if (m.add(e, f) == m.one() && m.mul(e, f) == m.zero() && m.mul(f, e) == m.zero()) {
          return f;
        }
      }
      return std::nullopt;
    }

    template <typename Model>
    json symbolic_check(Model const& m, std::vector<TheoremId> const& ids, bool commutative,
                        json const& non_commuting, std::vector<Verdict>& verdicts) {
      auto const idem = m.idempotents();
      auto const two  = m.add(m.one(), m.one());
      json       missing_complement;
      for (auto const& e : idem) {
        if (!symbolic_complement(m, idem, e)) {
          missing_complement = json::array({to_string(e)});
          break;
        }
      }
      bool const complements = missing_complement.is_null();
      json       reports     = json::array();
      for (auto id : ids) {
        json hyps  = json::array();
        json concl = json::array();
        bool hold  = true;
        auto hyp   = [&](std::string_view name, bool holds, json witness) {
          hyps.push_back(condition_json(name, holds, holds ? json::array() : std::move(witness)));
          hold = hold && holds;
        };
        // Products of idempotents stay idempotent, so 1 + 1 is never such a
        // product; every element is a sum of copies of idempotent generators.
        switch (id) {
          case TheoremId::main:
            hyp(condition::mult_gen_idempotents, false, json::array({to_string(two)}));
            hyp(condition::orthogonal_complements, complements, missing_complement);
            break;
          case TheoremId::main2:
            hyp(condition::mult_gen_idempotents, false, json::array({to_string(two)}));
            hyp(condition::nilorthogonal_complements, complements, missing_complement);
            hyp(condition::nil_in_v_and_z, true, json::array());
            break;
          case TheoremId::mainnilid:
            hyp(condition::mult_gen_nilidempotents, false, json::array({to_string(two)}));
            hyp(condition::nilorthogonal_complements, complements, missing_complement);
            hyp(condition::nil_in_v_and_z, true, json::array());
            break;
          case TheoremId::additivecom:
            hyp(condition::add_gen_idempotents, true, json::array());
            hyp(condition::orthogonal_complements, complements, missing_complement);
            hyp(condition::nil_in_z, true, json::array());
            break;
        }
        bool concl_hold = commutative;
        concl.push_back(condition_json(condition::commutative, commutative,
                                       commutative ? json::array() : non_commuting));
        if (id == TheoremId::main || id == TheoremId::main2) {
          concl.push_back(condition_json(condition::boolean, false, json::array({to_string(two)})));
          concl_hold = false;
        }
        auto const v = !hold ? Verdict::vacuous : (concl_hold ? Verdict::confirmed : Verdict::violation);
        verdicts.push_back(v);
        json r;
        r["theorem"]     = to_string(id);
        r["verdict"]     = to_string(v);
        r["hypotheses"]  = std::move(hyps);
        r["conclusions"] = std::move(concl);
        reports.push_back(std::move(r));
      }
      return reports;
    }

    template <typename Model>
    json symbolic_classes(Model const& m, bool commutative, json const& non_commuting) {
      json j;
      auto strings = [](auto const& v) {
        json out = json::array();
        for (auto const& e : v) {
          out.push_back(to_string(e));
        }
        return out;
      };
      auto const window = m.window(default_window);
      bool       certified = true;
      for (auto const& p : window) {
        auto const cert = m.additive_certificate(p);
        auto       sum  = m.zero();
        for (auto const& q : cert) {
          certified = certified && m.is_idempotent(q);
          sum       = m.add(sum, q);
        }
        certified = certified && sum == p;
      }
      j["idempotents"]                  = strings(m.idempotents());
      j["nilpotents"]                   = json::array({to_string(m.zero())});
      j["boolean"]                      = false;
      j["boolean_witness"]              = to_string(m.add(m.one(), m.one()));
      j["commutative"]                  = commutative;
      j["non_commuting"]                = non_commuting;
      j["add_generated_by_idempotents"] = certified;
      j["window"]                       = default_window;
      j["window_size"]                  = window.size();
      return j;
    }

    Report run_symbolic(std::string const& command, Options const& o) {
      Report r{command, input_descriptor(o), ReportVerdict::ok, nullptr, {}};
      if (command != "classify" && command != "check") {
        throw DomainError(
            fmt::format("preset '{}' is symbolic; only classify and check accept it", o.preset));
      }
      std::vector<Verdict> verdicts;
      auto                 handle = [&](auto const& m, bool commutative, json non_commuting) {
        if (command == "classify") {
          r.result = symbolic_classes(m, commutative, non_commuting);
        } else {
          r.result            = json::object();
          r.result["reports"] = symbolic_check(m, theorem_args(o), commutative, non_commuting, verdicts);
          r.verdict           = combine(verdicts);
        }
      };
      if (o.preset == "nat") {
        handle(NatModel{}, true, json::array());
      } else {
        TripleModel m;
        handle(m, false, json::array({to_string(m.x()), to_string(m.y())}));
      }
      return r;
    }

    Report execute(std::string const& command, Options const& o) {
      if (command == "census") {
        ScanOptions opts;
        if (o.max_order < 1) {
          throw UsageError("--max-order must be at least 1");
        }
        for (std::size_t k = o.include_trivial ? 1 : 2; k <= o.max_order; ++k) {
          opts.orders.push_back(k);
        }
        opts.theorems        = theorem_args(o);
        opts.include_trivial = o.include_trivial;
        opts.workers         = std::max(1u, o.workers);
        opts.max_order       = std::max(o.max_order, default_max_order);
        if (o.max_order > default_max_order) {
          throw DomainError(fmt::format("census order must be at most {}", default_max_order));
        }
        auto const scan_report = scan(opts);
        Report     r{command, nullptr, ReportVerdict::ok, json::object(), {}};
        r.result["orders"] = scan_report.orders;
        json counts        = json::object();
        std::size_t total  = 0;
        for (auto [order, count] : scan_report.count_per_order) {
          counts[std::to_string(order)] = count;
          total += count;
        }
        r.result["count_per_order"] = std::move(counts);
        r.result["total"]           = total;
        json tallies                = json::object();
        for (auto const& [id, t] : scan_report.tallies) {
          tallies[std::string(to_string(id))] = {{"confirmed", t.confirmed}, {"vacuous", t.vacuous}};
        }
        r.result["tallies"] = std::move(tallies);
        json violations     = json::array();
        for (auto const& v : scan_report.violations) {
          auto s   = parse_semiring_file(v.serialized);
          auto vj  = theorem_json(s, v.report);
          vj["semiring"] = v.serialized;
          violations.push_back(std::move(vj));
        }
        r.result["violations"] = std::move(violations);
        r.result["aborted"]    = scan_report.aborted;
        if (o.list) {
          json entries = json::array();
          for (auto const& e : scan_report.entries) {
            json ej;
            ej["order"]   = e.semiring.order();
            ej["key"]     = canonical_form(e.semiring).hex();
            ej["flags"]   = flags_json(e.flags);
            json verdicts = json::object();
            for (auto [id, v] : e.verdicts) {
              verdicts[std::string(to_string(id))] = to_string(v);
            }
            ej["verdicts"] = std::move(verdicts);
            entries.push_back(std::move(ej));
          }
          r.result["entries"] = std::move(entries);
        }
        if (scan_report.aborted) {
          r.verdict = ReportVerdict::violation;
        }
        return r;
      }

      if (is_symbolic_preset(o.preset) && o.file.empty()) {
        return run_symbolic(command, o);
      }

      auto const s = load(o.file, o.preset);
      Report     r{command, input_descriptor(o), ReportVerdict::ok, json::object(), {}};

      if (command == "validate") {
        auto const axioms = validate(s);
        r.result["order"] = s.order();
        r.result["valid"] = axioms.valid;
        json list         = json::array();
        for (auto const& v : axioms.violations) {
          list.push_back({{"axiom", v.axiom},
                          {"witness", labels_of(s, std::vector<element_type>(v.witness.begin(),
                                                                              v.witness.end()))}});
        }
        r.result["violations"] = std::move(list);
        if (!axioms.valid) {
          r.verdict = ReportVerdict::error;
          r.error   = fmt::format("{} axiom instance(s) fail", axioms.violations.size());
        }
      } else if (command == "classify") {
        r.result = classes_json(s);
      } else if (command == "closure") {
        auto const mode = o.mode == "add" ? GenerationMode::additive : GenerationMode::multiplicative;
        auto const cls  = o.generators == "nilidempotents" ? GeneratorClass::nilidempotents
                                                           : GeneratorClass::idempotents;
        auto const cert = generation_certificate(s, mode, cls);
        r.result["mode"]       = to_string(mode);
        r.result["generators"] = to_string(cls);
        r.result["generated"]  = cert.generated;
        json expressions       = json::object();
        for (auto const& [a, word] : cert.expressions) {
          expressions[s.label(a)] = labels_of(s, word);
        }
        r.result["expressions"] = std::move(expressions);
        r.result["uncovered"]   = labels_of(s, cert.uncovered);
      } else if (command == "complement") {
        auto const e = element_arg(s, o);
        if (o.kind == "nilorthogonal" && o.all) {
          json list = json::array();
          for (auto const& w : all_nilorthogonal_complements(s, e)) {
            list.push_back(witness_json(s, w));
          }
          r.verdict = list.empty() ? ReportVerdict::absent : ReportVerdict::ok;
          r.result["witnesses"] = std::move(list);
        } else {
          auto const w = o.kind == "nilorthogonal" ? nilorthogonal_complement(s, e)
                                                   : orthogonal_complement(s, e);
          r.result["element"] = s.label(e);
          r.result["kind"]    = o.kind;
          r.result["witness"] = w ? witness_json(s, *w) : json(nullptr);
          r.verdict           = w ? ReportVerdict::ok : ReportVerdict::absent;
        }
      } else if (command == "decompose") {
        auto const b       = o.element.empty() ? s.one() : s.at(o.element);
        auto const max_len = o.max_len == 0 ? s.order() : o.max_len;
        json       list    = json::array();
        for (auto const& d : orthogonal_decompositions(s, b, max_len)) {
          list.push_back(labels_of(s, d));
        }
        r.result["element"]        = s.label(b);
        r.result["max_len"]        = max_len;
        r.result["decompositions"] = std::move(list);
      } else if (command == "lift") {
        auto const trace = lift_nilidempotent(s, element_arg(s, o));
        r.result["g"]    = s.label(trace.g0);
        r.result["z"]    = s.label(trace.z0);
        json steps       = json::array();
        for (auto const& st : trace.steps) {
          steps.push_back({{"g", s.label(st.g)}, {"z", s.label(st.z)}, {"w", s.label(st.w)}});
        }
        r.result["steps"]      = std::move(steps);
        r.result["f"]          = s.label(trace.f);
        r.result["correction"] = s.label(trace.correction);
        r.result["iterations"] = trace.iterations;
      } else if (command == "invert") {
        auto const x = element_arg(s, o);
        auto const y = invert_unipotent(s, x);
        r.result["x"]       = s.label(x);
        r.result["unit"]    = s.label(s.add(s.one(), x));
        r.result["inverse"] = s.label(y);
      } else if (command == "peirce") {
        auto const p            = peirce_decompose(s);
        r.result["primitives"]  = labels_of(s, p.primitives);
        json factors            = json::array();
        for (std::size_t i = 0; i < p.factors.size(); ++i) {
          factors.push_back({{"identity", s.label(p.primitives[i])},
                             {"order", p.factors[i].order()},
                             {"carrier", labels_of(s, p.carriers[i])},
                             {"classification", to_string(p.factor_classification[i])}});
        }
        r.result["factors"] = std::move(factors);
        json iso            = json::object();
        for (auto a : s.elements().members()) {
          json coords = json::array();
          for (std::size_t i = 0; i < p.factors.size(); ++i) {
            coords.push_back(s.label(p.carriers[i][p.iso[a][i]]));
          }
          iso[s.label(a)] = std::move(coords);
        }
        r.result["isomorphism"] = std::move(iso);
      } else if (command == "iso") {
        if (o.other_file.empty() && o.other_preset.empty()) {
          throw UsageError("iso needs --other-file PATH or --other-preset NAME");
        }
        auto const t   = load(o.other_file, o.other_preset);
        auto const phi = isomorphic(s, t);
        r.result["isomorphic"] = phi.has_value();
        json map               = nullptr;
        if (phi) {
          map = json::object();
          for (auto a : s.elements().members()) {
            map[s.label(a)] = t.label((*phi)[a]);
          }
        }
        r.result["map"] = std::move(map);
        r.verdict       = phi ? ReportVerdict::ok : ReportVerdict::absent;
      } else if (command == "check") {
        std::vector<Verdict> verdicts;
        json                 reports = json::array();
        for (auto id : theorem_args(o)) {
          auto const tr = check_theorem(s, id);
          verdicts.push_back(tr.verdict);
          reports.push_back(theorem_json(s, tr));
        }
        r.result["reports"] = std::move(reports);
        r.verdict           = combine(verdicts);
        if (r.verdict == ReportVerdict::violation) {
          r.result["semiring"] = serialize_semiring(s);
        }
      } else if (command == "build") {
        auto const text = serialize_semiring(s);
        r.result["order"] = s.order();
        if (!o.output.empty()) {
          std::ofstream out(o.output, std::ios::binary);
          out << text;
          if (!out) {
            throw DomainError(fmt::format("cannot write '{}'", o.output));
          }
          r.result["output"] = o.output;
        } else {
          r.result["document"] = text;
        }
      }
      return r;
    }

    void add_input(CLI::App* sub, Options& o) {
      sub->add_option("--file", o.file, "semiring file");
      sub->add_option("--preset", o.preset, "preset name");
      sub->add_flag("--json", o.json_output, "emit JSON");
    }

  }  // namespace

  int exit_code_for(ReportVerdict v) {
    switch (v) {
      case ReportVerdict::ok:
      case ReportVerdict::absent:
      case ReportVerdict::vacuous:
      case ReportVerdict::confirmed:
        return 0;
      case ReportVerdict::violation:
        return 2;
      case ReportVerdict::error:
        return 1;
    }
    return 1;
  }

  RunResult run(std::vector<std::string> const& args) {
    Options  o;
    CLI::App app{"Finite semiring toolkit: idempotents, complements, lifting and theorem checks",
                 "idemgen"};
    app.require_subcommand(1);

    std::vector<std::string> const theorem_choices{"main", "main2", "mainnilid", "additivecom", "all"};

    for (auto const& [name, about] : {std::pair{"validate", "check the semiring axioms"},
                                      std::pair{"classify", "element classes"},
                                      std::pair{"peirce", "Peirce decomposition into factors"}}) {
      add_input(app.add_subcommand(name, about), o);
    }
    {
      auto* sub = app.add_subcommand("closure", "generation certificate");
      add_input(sub, o);
      sub->add_option("--mode", o.mode)->check(CLI::IsMember({"mult", "add"}));
      sub->add_option("--generators", o.generators)
          ->check(CLI::IsMember({"idempotents", "nilidempotents"}));
    }
    {
      auto* sub = app.add_subcommand("complement", "orthogonal or nilorthogonal complement");
      add_input(sub, o);
      sub->add_option("--element", o.element)->required();
      sub->add_option("--kind", o.kind)->check(CLI::IsMember({"orthogonal", "nilorthogonal"}));
      sub->add_flag("--all", o.all, "list every nilorthogonal witness");
    }
    {
      auto* sub = app.add_subcommand("decompose", "orthogonal idempotent decompositions");
      add_input(sub, o);
      sub->add_option("--element", o.element, "element to decompose (default 1)");
      sub->add_option("--max-len", o.max_len);
    }
    for (auto const& [name, about] : {std::pair{"lift", "lift a nilidempotent to an idempotent"},
                                      std::pair{"invert", "inverse of 1 + x for nilpotent x"}}) {
      auto* sub = app.add_subcommand(name, about);
      add_input(sub, o);
      sub->add_option("--element", o.element)->required();
    }
    {
      auto* sub = app.add_subcommand("iso", "isomorphism test");
      add_input(sub, o);
      sub->add_option("--other-file", o.other_file);
      sub->add_option("--other-preset", o.other_preset);
    }
    {
      auto* sub = app.add_subcommand("check", "theorem verdicts");
      add_input(sub, o);
      sub->add_option("--theorem", o.theorem)->check(CLI::IsMember(theorem_choices));
    }
    {
      auto* sub = app.add_subcommand("census", "enumerate and scan small semirings");
      sub->add_flag("--json", o.json_output, "emit JSON");
      sub->add_option("--max-order", o.max_order);
      sub->add_option("--theorem", o.theorem)->check(CLI::IsMember(theorem_choices));
      sub->add_flag("--include-trivial", o.include_trivial);
      sub->add_option("--workers", o.workers);
      sub->add_flag("--list", o.list, "include per-semiring flags");
    }
    {
      auto* sub = app.add_subcommand("build", "write a semiring file");
      add_input(sub, o);
      sub->add_option("--output", o.output);
    }

    auto const json_requested = std::ranges::find(args, "--json") != args.end();
    auto       fail           = [&](std::string const& command, std::string const& message) {
      Report r{command, input_descriptor(o), ReportVerdict::error, nullptr, message};
      return RunResult{1, r, emit_report(r, json_requested ? ReportFormat::json : ReportFormat::text)};
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      return {0, Report{"help", nullptr, ReportVerdict::ok, nullptr, {}}, app.help()};
    } catch (CLI::ParseError const& e) {
      return fail(args.empty() ? "" : args.front(), e.what());
    }

    auto const command = app.get_subcommands().front()->get_name();
    try {
      auto       report = execute(command, o);
      auto const format = o.json_output ? ReportFormat::json : ReportFormat::text;
      if (command == "build" && o.output.empty() && !o.json_output) {
        auto doc = report.result["document"].get<std::string>();
        return {0, std::move(report), std::move(doc)};
      }
      auto out = emit_report(report, format);
      return {exit_code_for(report.verdict), std::move(report), std::move(out)};
    } catch (std::exception const& e) {
      return fail(command, e.what());
    }
  }

}  // namespace idemgen
