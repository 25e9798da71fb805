#include "idemgen/complement.hpp"

#include <fmt/format.h>

#include "idemgen/classify.hpp"
#include "idemgen/errors.hpp"

namespace idemgen {

  std::string_view to_string(ComplementKind k) {
    return k == ComplementKind::orthogonal ? "orthogonal" : "nilorthogonal";
  }

  namespace {

    void require_idempotent(FiniteSemiring const& s, element_type e) {
      if (e >= s.order()) {
        throw DomainError(fmt::format("element index {} out of range", e));
      }
      if (!is_idempotent(s, e)) {
        throw DomainError(fmt::format("'{}' is not idempotent", s.label(e)));
      }
    }

    bool orthogonal(FiniteSemiring const& s, element_type e, element_type f) {
      return s.mul(e, f) == s.zero() && s.mul(f, e) == s.zero();
    }

    template <typename Fn>
    void for_each_nilorthogonal(FiniteSemiring const& s, element_type e, Fn&& fn) {
      auto const n = s.order();
      std::vector<bool> nil(n), nilid(n);
      for (std::size_t i = 0; i < n; ++i) {
        nil[i] = is_nilpotent(s, static_cast<element_type>(i));
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto const sq = s.mul(static_cast<element_type>(i), static_cast<element_type>(i));
        for (std::size_t x = 0; x < n && !nilid[i]; ++x) {
          nilid[i] = nil[x] && s.add(static_cast<element_type>(i), static_cast<element_type>(x)) == sq;
        }
      }
      for (std::size_t fi = 0; fi < n; ++fi) {
        auto const f = static_cast<element_type>(fi);
        if (!nilid[f] || !nil[s.mul(e, f)] || !nil[s.mul(f, e)]) {
          continue;
        }
        auto const sum = s.add(e, f);
        for (std::size_t xi = 0; xi < n; ++xi) {
          auto const x = static_cast<element_type>(xi);
          if (nil[x] && s.add(s.one(), x) == sum) {
            if (!fn(ComplementWitness{e, f, ComplementKind::nilorthogonal, x})) {
              return;
            }
          }
        }
      }
    }

  }  // namespace

  bool is_valid_witness(FiniteSemiring const& s, ComplementWitness const& w) {
    if (!is_idempotent(s, w.e)) {
      return false;
    }
    if (w.kind == ComplementKind::orthogonal) {
      return w.x == s.zero() && is_idempotent(s, w.f) && s.add(w.e, w.f) == s.one()
             && orthogonal(s, w.e, w.f);
    }
    return is_nilidempotent(s, w.f) && is_nilpotent(s, w.x)
           && s.add(w.e, w.f) == s.add(s.one(), w.x) && is_nilpotent(s, s.mul(w.e, w.f))
           && is_nilpotent(s, s.mul(w.f, w.e));
  }

  std::optional<ComplementWitness> orthogonal_complement(FiniteSemiring const& s, element_type e) {
    require_idempotent(s, e);
    for (std::size_t fi = 0; fi < s.order(); ++fi) {
      auto const f = static_cast<element_type>(fi);
      if (is_idempotent(s, f) && s.add(e, f) == s.one() && orthogonal(s, e, f)) {
        return ComplementWitness{e, f, ComplementKind::orthogonal, s.zero()};
      }
    }
    return std::nullopt;
  }

  std::optional<ComplementWitness> nilorthogonal_complement(FiniteSemiring const& s,
                                                            element_type          e) {
    require_idempotent(s, e);
    std::optional<ComplementWitness> found;
    for_each_nilorthogonal(s, e, [&found](ComplementWitness const& w) {
      found = w;
      return false;
    });
    return found;
  }

  std::vector<ComplementWitness> all_nilorthogonal_complements(FiniteSemiring const& s,
                                                               element_type          e) {
    require_idempotent(s, e);
    std::vector<ComplementWitness> out;
    for_each_nilorthogonal(s, e, [&out](ComplementWitness const& w) {
      out.push_back(w);
      return true;
    });
    return out;
  }

  std::vector<std::vector<element_type>>
  orthogonal_decompositions(FiniteSemiring const& s, element_type b, std::size_t max_len) {
    std::vector<element_type> candidates;
    for (std::size_t i = 0; i < s.order(); ++i) {
      auto const a = static_cast<element_type>(i);
      if (a != s.zero() && is_idempotent(s, a)) {
        candidates.push_back(a);
      }
    }
    std::vector<std::vector<element_type>> out;
    std::vector<element_type>              chosen;
    // Depth-first over increasing candidate positions gives sorted member
    // lists in lexicographic order.
    auto dfs = [&](auto&& self, std::size_t start, element_type sum) -> void {
      if (!chosen.empty() && sum == b) {
        out.push_back(chosen);
      }
      if (chosen.size() == max_len) {
        return;
      }
      for (std::size_t k = start; k < candidates.size(); ++k) {
        auto const a  = candidates[k];
        bool       ok = true;
        for (auto c : chosen) {
          if (!orthogonal(s, a, c)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen.push_back(a);
          self(self, k + 1, s.add(sum, a));
          chosen.pop_back();
        }
      }
    };
    dfs(dfs, 0, s.zero());
    return out;
  }

}  // namespace idemgen
