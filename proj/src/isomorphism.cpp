#include "idemgen/isomorphism.hpp"

#include <fmt/format.h>

#include "idemgen/errors.hpp"

namespace idemgen {

  namespace {

    // Preperiod and period of a, op(a, a), op(op(a, a), a), ...
    template <typename Op>
    std::pair<unsigned, unsigned> orbit_shape(std::size_t n, element_type a, Op&& op) {
      std::vector<int> seen(n, -1);
      element_type     cur = a;
      for (int step = 0;; ++step) {
        if (seen[cur] >= 0) {
          return {static_cast<unsigned>(seen[cur]), static_cast<unsigned>(step - seen[cur])};
        }
        seen[cur] = step;
        cur       = op(cur, a);
      }
    }

    class Matcher {
     public:
      Matcher(FiniteSemiring const& s, FiniteSemiring const& t)
          : _s(s),
            _t(t),
            _inv_s(element_invariants(s)),
            _inv_t(element_invariants(t)),
            _fwd(s.order(), -1),
            _bwd(t.order(), -1) {}

      bool run() {
        return assign(_s.zero(), _t.zero()) && assign(_s.one(), _t.one()) && search();
      }

      std::vector<element_type> result() const {
        std::vector<element_type> phi(_fwd.size());
        for (std::size_t a = 0; a < _fwd.size(); ++a) {
          phi[a] = static_cast<element_type>(_fwd[a]);
        }
        return phi;
      }

     private:
      // Assigns a -> b and every image forced by the tables on assigned
      // elements; false on conflict (the partial assignment is then left for
      // the caller to undo).
      bool assign(element_type a0, element_type b0) {
        std::vector<std::pair<element_type, element_type>> queue{{a0, b0}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (_fwd[a] == b) {
            continue;
          }
          if (_fwd[a] != -1 || _bwd[b] != -1 || _inv_s[a] != _inv_t[b]) {
            return false;
          }
          _fwd[a] = b;
          _bwd[b] = a;
          _trail.push_back(a);
          for (auto c : _trail) {
            auto const d = static_cast<element_type>(_fwd[c]);
            queue.emplace_back(_s.add(a, c), _t.add(b, d));
            queue.emplace_back(_s.add(c, a), _t.add(d, b));
            queue.emplace_back(_s.mul(a, c), _t.mul(b, d));
            queue.emplace_back(_s.mul(c, a), _t.mul(d, b));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          auto a = _trail.back();
          _trail.pop_back();
          _bwd[_fwd[a]] = -1;
          _fwd[a]       = -1;
        }
      }

      bool search() {
        std::size_t a = 0;
        while (a < _fwd.size() && _fwd[a] != -1) {
          ++a;
        }
        if (a == _fwd.size()) {
          return true;
        }
        for (std::size_t b = 0; b < _bwd.size(); ++b) {
          if (_bwd[b] != -1 || _inv_s[a] != _inv_t[b]) {
            continue;
          }
          auto const mark = _trail.size();
          if (assign(static_cast<element_type>(a), static_cast<element_type>(b)) && search()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      FiniteSemiring const&         _s;
      FiniteSemiring const&         _t;
      std::vector<ElementInvariant> _inv_s;
      std::vector<ElementInvariant> _inv_t;
      std::vector<int>              _fwd;
      std::vector<int>              _bwd;
      std::vector<element_type>     _trail;
    };

  }  // namespace

  std::vector<ElementInvariant> element_invariants(FiniteSemiring const& s) {
    auto const                    n = s.order();
    std::vector<ElementInvariant> out(n);
    auto mul = [&s](element_type x, element_type y) { return s.mul(x, y); };
    auto add = [&s](element_type x, element_type y) { return s.add(x, y); };
    for (std::size_t i = 0; i < n; ++i) {
      auto const a    = static_cast<element_type>(i);
      auto&      v    = out[i];
      v[0]            = a == s.zero() ? 0 : (a == s.one() ? 1 : 2);
      std::tie(v[1], v[2]) = orbit_shape(n, a, mul);
      std::tie(v[3], v[4]) = orbit_shape(n, a, add);
      for (std::size_t j = 0; j < n; ++j) {
        auto const b = static_cast<element_type>(j);
        v[5] += s.add(a, b) == a;
        v[6] += s.mul(a, b) == s.zero();
        v[7] += s.mul(b, a) == s.zero();
        v[8] += s.mul(a, b) == s.mul(b, a);
        v[9] += s.mul(a, b) == a;
      }
    }
    return out;
  }

  std::optional<std::vector<element_type>> isomorphic(FiniteSemiring const& s,
                                                      FiniteSemiring const& t) {
    if (s.order() != t.order()) {
      return std::nullopt;
    }
    Matcher m(s, t);
    if (!m.run()) {
      return std::nullopt;
    }
    auto phi = m.result();
    if (!is_isomorphism(s, t, phi)) {
      throw InternalError("isomorphism search returned a map that does not preserve the tables");
    }
    return phi;
  }

  bool is_isomorphism(FiniteSemiring const&            s,
                      FiniteSemiring const&            t,
                      std::vector<element_type> const& phi) {
    auto const n = s.order();
    if (t.order() != n || phi.size() != n) {
      return false;
    }
    std::vector<bool> hit(n);
    for (auto b : phi) {
      if (b >= n || hit[b]) {
        return false;
      }
      hit[b] = true;
    }
    if (phi[s.zero()] != t.zero() || phi[s.one()] != t.one()) {
      return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const a = static_cast<element_type>(i);
        auto const b = static_cast<element_type>(j);
        if (phi[s.add(a, b)] != t.add(phi[a], phi[b])
            || phi[s.mul(a, b)] != t.mul(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteSemiring relabel(FiniteSemiring const& s, std::vector<element_type> const& perm) {
    auto const n = s.order();
    if (perm.size() != n) {
      throw DomainError(fmt::format("relabeling has {} entries, expected {}", perm.size(), n));
    }
    std::vector<std::string>   labels(n);
    FiniteSemiring::table_type add(n * n), mul(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[perm[i]] = s.label(static_cast<element_type>(i));
      for (std::size_t j = 0; j < n; ++j) {
        auto const a                 = static_cast<element_type>(i);
        auto const b                 = static_cast<element_type>(j);
        add[perm[a] * n + perm[b]] = perm[s.add(a, b)];
        mul[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
      }
    }
    return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), perm[s.zero()],
                          perm[s.one()]);
  }

}  // namespace idemgen
