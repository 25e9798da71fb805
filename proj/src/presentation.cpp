#include "idemgen/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_map>

#include <fmt/format.h>

#include "idemgen/errors.hpp"

namespace idemgen {

  std::string_view to_string(PresentationStatus s) {
    return s == PresentationStatus::finite ? "finite" : "exceeds-bound";
  }

  std::string to_string(Term const& t) {
    switch (t.kind) {
      case Term::Kind::zero:
        return "0";
      case Term::Kind::one:
        return "1";
      case Term::Kind::generator:
        return t.name;
      case Term::Kind::sum:
        return fmt::format("({}+{})", to_string(t.args[0]), to_string(t.args[1]));
      case Term::Kind::product:
        break;
    }
    return fmt::format("({}*{})", to_string(t.args[0]), to_string(t.args[1]));
  }

  namespace {

    class TermParser {
     public:
      explicit TermParser(std::string_view text) : _text(text) {}

      Term parse() {
        auto t = sum();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string_view what) const {
        throw DomainError(fmt::format("{} at position {} in term '{}'", what, _pos, _text));
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      Term sum() {
        auto t = product();
        while (accept('+')) {
          t = std::move(t) + product();
        }
        return t;
      }

      Term product() {
        auto t = power();
        while (accept('*')) {
          t = std::move(t) * power();
        }
        return t;
      }

      Term power() {
        auto base = atom();
        if (!accept('^')) {
          return base;
        }
        skip_space();
        std::size_t start = _pos;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an exponent");
        }
        auto const k = std::stoul(std::string(_text.substr(start, _pos - start)));
        if (k == 0) {
          return Term::one();
        }
        Term t = base;
        for (std::size_t i = 1; i < k; ++i) {
          t = std::move(t) * base;
        }
        return t;
      }

      Term atom() {
        skip_space();
        if (_pos >= _text.size()) {
          fail("unexpected end");
        }
        char const c = _text[_pos];
        if (c == '(') {
          ++_pos;
          auto t = sum();
          if (!accept(')')) {
            fail("expected ')'");
          }
          return t;
        }
        if (c == '0' || c == '1') {
          ++_pos;
          return c == '0' ? Term::zero() : Term::one();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t start = _pos;
          while (_pos < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_')) {
            ++_pos;
          }
          return Term::gen(std::string(_text.substr(start, _pos - start)));
        }
        fail("unexpected character");
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    // Partial operation tables over classes of terms, kept closed under the
    // semiring axioms by union-find merging.
    class TermClosure {
     public:
      using node = std::size_t;

      TermClosure(std::vector<std::string> const& generators, bool idempotent)
          : _idempotent(idempotent) {
        add_node("0");
        add_node("1");
        impose_constants(0);
        impose_constants(1);
        for (auto const& g : generators) {
          _generators[g] = add_node(g);
          impose_constants(_generators[g]);
        }
        merge_pending();
      }

      std::size_t live() const {
        return _live;
      }

      node find(node x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      std::vector<node> reps() {
        std::vector<node> out;
        for (node x = 0; x < _parent.size(); ++x) {
          if (_parent[x] == x) {
            out.push_back(x);
          }
        }
        return out;
      }

      std::optional<node> eval(Term const& t, bool define) {
        switch (t.kind) {
          case Term::Kind::zero:
            return find(0);
          case Term::Kind::one:
            return find(1);
          case Term::Kind::generator: {
            auto it = _generators.find(t.name);
            if (it == _generators.end()) {
              throw DomainError(fmt::format("relation uses unknown generator '{}'", t.name));
            }
            return find(it->second);
          }
          case Term::Kind::sum:
          case Term::Kind::product:
            break;
        }
        auto a = eval(t.args[0], define);
        auto b = eval(t.args[1], define);
        if (!a || !b) {
          return std::nullopt;
        }
        bool const is_sum = t.kind == Term::Kind::sum;
        auto       v      = is_sum ? get_add(*a, *b) : get_mul(*a, *b);
        if (!v && define) {
          v = define_entry(is_sum, *a, *b);
        }
        return v;
      }

      void unite(node a, node b) {
        if (find(a) != find(b)) {
          _pending.emplace_back(a, b);
        }
      }

      // Applies associativity, distributivity and the relations to the
      // defined entries until nothing changes.
      void deduce(std::vector<Relation> const& relations) {
        bool changed = true;
        while (changed) {
          changed = false;
          auto const r = reps();
          for (auto a : r) {
            for (auto b : r) {
              auto const ab_add = get_add(a, b);
              auto const ab_mul = get_mul(a, b);
              for (auto c : r) {
                auto const bc_add = get_add(b, c);
                auto const bc_mul = get_mul(b, c);
                auto const ac_mul = get_mul(a, c);
                if (ab_add && bc_add) {
                  changed |= equate(true, *ab_add, c, true, a, *bc_add);
                }
                if (ab_mul && bc_mul) {
                  changed |= equate(false, *ab_mul, c, false, a, *bc_mul);
                }
                if (bc_add && ab_mul && ac_mul) {
                  changed |= equate(false, a, *bc_add, true, *ab_mul, *ac_mul);
                }
                if (ab_add && ac_mul && bc_mul) {
                  changed |= equate(false, *ab_add, c, true, *ac_mul, *bc_mul);
                }
              }
            }
          }
          for (auto const& rel : relations) {
            auto l = eval(rel.lhs, false);
            auto r2 = eval(rel.rhs, false);
            if (l && r2 && *l != *r2) {
              unite(*l, *r2);
            }
          }
          changed |= merge_pending();
        }
      }

      bool complete() {
        auto const r = reps();
        for (auto a : r) {
          for (auto b : r) {
            if (!get_add(a, b) || !get_mul(a, b)) {
              return false;
            }
          }
        }
        return true;
      }

      // Defines undefined sums, then products, of live classes in index order
      // while fewer than bound classes are live.
      void define_batch(std::size_t bound) {
        auto const r = reps();
        for (bool is_sum : {true, false}) {
          for (auto a : r) {
            for (auto b : r) {
              if (_live >= bound) {
                return;
              }
              a = find(a);
              b = find(b);
              if (!(is_sum ? get_add(a, b) : get_mul(a, b))) {
                define_entry(is_sum, a, b);
              }
            }
          }
        }
      }

      std::optional<node> get_add(node a, node b) {
        return lookup(_add, add_key(find(a), find(b)));
      }
      std::optional<node> get_mul(node a, node b) {
        return lookup(_mul, key(find(a), find(b)));
      }

      std::string const& label(node x) const {
        return _labels[x];
      }

      std::map<std::string, node> const& generators() const {
        return _generators;
      }

     private:
      using table = std::unordered_map<std::uint64_t, node>;

      static std::uint64_t key(node a, node b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
      }
      static std::uint64_t add_key(node a, node b) {
        return a < b ? key(a, b) : key(b, a);
      }

      std::optional<node> lookup(table const& t, std::uint64_t k) {
        auto it = t.find(k);
        if (it == t.end()) {
          return std::nullopt;
        }
        return find(it->second);
      }

      node add_node(std::string label) {
        _parent.push_back(_parent.size());
        _labels.push_back(std::move(label));
        ++_live;
        return _parent.size() - 1;
      }

      void impose_constants(node x) {
        set(true, 0, x, x);
        set(false, 1, x, x);
        set(false, x, 1, x);
        set(false, 0, x, 0);
        set(false, x, 0, 0);
        if (_idempotent) {
          set(true, x, x, x);
        }
      }

      // Returns true if the table changed or a merge was queued.
      bool set(bool is_sum, node a, node b, node v) {
        a          = find(a);
        b          = find(b);
        v          = find(v);
        auto& t    = is_sum ? _add : _mul;
        auto  k    = is_sum ? add_key(a, b) : key(a, b);
        auto [it, inserted] = t.emplace(k, v);
        if (inserted) {
          return true;
        }
        if (find(it->second) != v) {
          _pending.emplace_back(it->second, v);
          return true;
        }
        return false;
      }

      node define_entry(bool is_sum, node a, node b) {
        auto const x = add_node(fmt::format("({}{}{})", _labels[a], is_sum ? '+' : '*', _labels[b]));
        impose_constants(x);
        set(is_sum, a, b, x);
        return x;
      }

      // (l1 op1 l2) == (r1 op2 r2) where both sides may be undefined.
      bool equate(bool l_sum, node l1, node l2, bool r_sum, node r1, node r2) {
        auto const l = l_sum ? get_add(l1, l2) : get_mul(l1, l2);
        auto const r = r_sum ? get_add(r1, r2) : get_mul(r1, r2);
        if (l && r) {
          if (*l != *r) {
            unite(*l, *r);
            return true;
          }
          return false;
        }
        if (l) {
          return set(r_sum, r1, r2, *l);
        }
        if (r) {
          return set(l_sum, l1, l2, *r);
        }
        return false;
      }

      // Processes queued merges and rekeys the tables, merging the values of
      // entries whose keys coincide.
      bool merge_pending() {
        bool merged = false;
        while (!_pending.empty()) {
          while (!_pending.empty()) {
            auto [a, b] = _pending.back();
            _pending.pop_back();
            a = find(a);
            b = find(b);
            if (a == b) {
              continue;
            }
            if (a > b) {
              std::swap(a, b);
            }
            _parent[b] = a;
            --_live;
            merged = true;
          }
          rekey(_add, true);
          rekey(_mul, false);
        }
        return merged;
      }

      void rekey(table& t, bool is_sum) {
        table fresh;
        fresh.reserve(t.size());
        for (auto const& [k, v] : t) {
          auto const a  = find(static_cast<node>(k >> 32));
          auto const b  = find(static_cast<node>(k & 0xffffffffu));
          auto const nk = is_sum ? add_key(a, b) : key(a, b);
          auto const nv = find(v);
          auto [it, inserted] = fresh.emplace(nk, nv);
          if (!inserted && find(it->second) != nv) {
            _pending.emplace_back(it->second, nv);
          }
        }
        t = std::move(fresh);
      }

      bool                                 _idempotent;
      std::vector<node>                    _parent;
      std::vector<std::string>             _labels;
      std::size_t                          _live = 0;
      table                                _add;
      table                                _mul;
      std::vector<std::pair<node, node>>   _pending;
      std::map<std::string, node>          _generators;
    };

    std::string display(std::string const& label) {
      if (label.size() >= 2 && label.front() == '(' && label.back() == ')') {
        return label.substr(1, label.size() - 2);
      }
      return label;
    }

    // Bound on deduce/define rounds; each round defines at least one entry
    // or merges at least one class, so this only guards against bugs.
    constexpr std::size_t max_rounds = 100000;

  }  // namespace

  Term parse_term(std::string_view text) {
    return TermParser(text).parse();
  }

  Relation parse_relation(std::string_view text) {
    auto const eq = text.find('=');
    if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
      throw DomainError(fmt::format("relation '{}' needs exactly one '='", text));
    }
    return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
  }

  PresentationResult presentation(std::vector<std::string> const& generators,
                                  std::vector<Relation> const&    relations,
                                  bool                            additively_idempotent,
                                  std::size_t                     universe_bound) {
    if (universe_bound < 2) {
      throw DomainError("the universe bound must be at least 2");
    }
    for (auto const& g : generators) {
      if (g == "0" || g == "1" || std::count(generators.begin(), generators.end(), g) > 1) {
        throw DomainError(fmt::format("invalid or repeated generator name '{}'", g));
      }
    }
    TermClosure cl(generators, additively_idempotent);
    for (auto const& rel : relations) {
      auto l = cl.eval(rel.lhs, true);
      auto r = cl.eval(rel.rhs, true);
      cl.unite(*l, *r);
    }

    PresentationResult result{PresentationStatus::exceeds_bound, std::nullopt, {}, {},
                              universe_bound};
    for (std::size_t round = 0; round < max_rounds; ++round) {
      cl.deduce(relations);
      if (cl.complete()) {
        result.status = PresentationStatus::finite;
        break;
      }
      if (cl.live() >= universe_bound) {
        return result;
      }
      cl.define_batch(universe_bound);
    }
    if (result.status != PresentationStatus::finite) {
      return result;
    }

    auto const                         reps = cl.reps();
    std::map<std::size_t, element_type> index;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      index[reps[i]] = static_cast<element_type>(i);
    }
    auto const                 n = reps.size();
    FiniteSemiring::table_type add(n * n), mul(n * n);
    std::vector<std::string>   labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(display(cl.label(reps[i])));
      for (std::size_t j = 0; j < n; ++j) {
        add[i * n + j] = index.at(*cl.get_add(reps[i], reps[j]));
        mul[i * n + j] = index.at(*cl.get_mul(reps[i], reps[j]));
      }
    }
    result.semiring.emplace(std::move(labels), std::move(add), std::move(mul),
                            index.at(cl.find(0)), index.at(cl.find(1)));
    for (auto const& g : generators) {
      auto const node = cl.generators().at(g);
      auto const rep  = cl.find(node);
      result.generator_images[g] = index.at(rep);
      if (rep != node) {
        result.collapsed_generators.emplace_back(g, display(cl.label(rep)));
      }
    }
    return result;
  }

  element_type evaluate(FiniteSemiring const&                      s,
                        Term const&                                t,
                        std::map<std::string, element_type> const& images) {
    switch (t.kind) {
      case Term::Kind::zero:
        return s.zero();
      case Term::Kind::one:
        return s.one();
      case Term::Kind::generator: {
        auto it = images.find(t.name);
        if (it == images.end()) {
          throw DomainError(fmt::format("no image for generator '{}'", t.name));
        }
        return it->second;
      }
      case Term::Kind::sum:
        return s.add(evaluate(s, t.args[0], images), evaluate(s, t.args[1], images));
      case Term::Kind::product:
        break;
    }
    return s.mul(evaluate(s, t.args[0], images), evaluate(s, t.args[1], images));
  }

  PresentationResult bxy_presentation(std::size_t universe_bound) {
    std::vector<Relation> relations;
    for (auto text : {"x+y=0", "x*y=0", "y*x=0", "x^2=0", "y^2=0"}) {
      relations.push_back(parse_relation(text));
    }
    return presentation({"x", "y"}, relations, true, universe_bound);
  }

}  // namespace idemgen
