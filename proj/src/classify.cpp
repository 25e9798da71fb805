#include "idemgen/classify.hpp"

namespace idemgen {

  element_type power(FiniteSemiring const& s, element_type a, std::size_t k) {
    element_type result = s.one();
    element_type base   = a;
    // Square and multiply; powers of a single element commute.
    while (k > 0) {
      if (k & 1) {
        result = s.mul(result, base);
      }
      base = s.mul(base, base);
      k >>= 1;
    }
    return result;
  }

  element_type scalar_repeat(FiniteSemiring const& s, std::size_t n, element_type a) {
    element_type result = s.zero();
    element_type base   = a;
    while (n > 0) {
      if (n & 1) {
        result = s.add(result, base);
      }
      base = s.add(base, base);
      n >>= 1;
    }
    return result;
  }

  std::optional<element_type> additive_inverse(FiniteSemiring const& s, element_type a) {
    for (std::size_t b = 0; b < s.order(); ++b) {
      if (s.add(a, static_cast<element_type>(b)) == s.zero()) {
        return static_cast<element_type>(b);
      }
    }
    return std::nullopt;
  }

  std::optional<unsigned> nilpotency_index(FiniteSemiring const& s, element_type a) {
    element_type p = a;
    for (unsigned k = 1; k <= s.order(); ++k) {
      if (p == s.zero()) {
        return k;
      }
      p = s.mul(p, a);
    }
    return std::nullopt;
  }

  std::optional<element_type> nilidempotent_defect(FiniteSemiring const& s, element_type e) {
    auto const sq = s.mul(e, e);
    for (std::size_t x = 0; x < s.order(); ++x) {
      auto const xe = static_cast<element_type>(x);
      if (s.add(e, xe) == sq && is_nilpotent(s, xe)) {
        return xe;
      }
    }
    return std::nullopt;
  }

  bool is_nilidempotent(FiniteSemiring const& s, element_type e) {
    return nilidempotent_defect(s, e).has_value();
  }

  bool is_central(FiniteSemiring const& s, element_type a) {
    for (std::size_t b = 0; b < s.order(); ++b) {
      auto const be = static_cast<element_type>(b);
      if (s.mul(a, be) != s.mul(be, a)) {
        return false;
      }
    }
    return true;
  }

  ClassReport element_classes(FiniteSemiring const& s) {
    auto const  n = s.order();
    ClassReport r{ElementSet(n),
                  ElementSet(n),
                  ElementSet(n),
                  ElementSet(n),
                  ElementSet(n),
                  ElementSet(n),
                  std::vector<std::optional<element_type>>(n),
                  std::vector<std::optional<element_type>>(n),
                  std::vector<std::optional<unsigned>>(n)};

    for (std::size_t i = 0; i < n; ++i) {
      auto const a = static_cast<element_type>(i);
      if (is_idempotent(s, a)) {
        r.idempotents.insert(a);
      }
      r.nilpotency_index[a] = nilpotency_index(s, a);
      if (r.nilpotency_index[a]) {
        r.nilpotents.insert(a);
      }
      r.additive_inverse[a] = additive_inverse(s, a);
      if (r.additive_inverse[a]) {
        r.additively_invertible.insert(a);
      }
      if (is_central(s, a)) {
        r.center.insert(a);
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto const b = static_cast<element_type>(j);
        if (s.mul(a, b) == s.one() && s.mul(b, a) == s.one()) {
          r.units.insert(a);
          r.unit_inverse[a] = b;
          break;
        }
      }
    }
    // Needs the full nilpotent set, hence a second pass.
    for (std::size_t i = 0; i < n; ++i) {
      auto const e  = static_cast<element_type>(i);
      auto const sq = s.mul(e, e);
      bool       found = false;
      r.nilpotents.for_each([&](element_type x) {
        if (!found && s.add(e, x) == sq) {
          found = true;
        }
      });
      if (found) {
        r.nilidempotents.insert(e);
      }
    }
    return r;
  }

}  // namespace idemgen
