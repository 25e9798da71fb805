// Test-side oracles.  Everything here is written from the definitions with
// plain loops and shares no code with the library beyond FiniteSemiring.

#ifndef IDEMGEN_TESTS_SUPPORT_HPP_
#define IDEMGEN_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "idemgen/constructors.hpp"
#include "idemgen/finite_semiring.hpp"

namespace idemgen::testing {

  using elems = std::vector<element_type>;

  inline elems all_of(FiniteSemiring const& s) {
    elems out(s.order());
    std::iota(out.begin(), out.end(), element_type{0});
    return out;
  }

  inline element_type slow_power(FiniteSemiring const& s, element_type a, unsigned k) {
    element_type r = s.one();
    for (unsigned i = 0; i < k; ++i) {
      r = s.mul(r, a);
    }
    return r;
  }

  inline elems oracle_idempotents(FiniteSemiring const& s) {
    elems out;
    for (auto a : all_of(s)) {
      if (s.mul(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline bool oracle_nilpotent(FiniteSemiring const& s, element_type a) {
    for (unsigned k = 1; k <= s.order() + 1; ++k) {
      if (slow_power(s, a, k) == s.zero()) {
        return true;
      }
    }
    return false;
  }

  inline elems oracle_nilpotents(FiniteSemiring const& s) {
    elems out;
    for (auto a : all_of(s)) {
      if (oracle_nilpotent(s, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline elems oracle_center(FiniteSemiring const& s) {
    elems out;
    for (auto a : all_of(s)) {
      bool central = true;
      for (auto b : all_of(s)) {
        central = central && s.mul(a, b) == s.mul(b, a);
      }
      if (central) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline bool oracle_invertible(FiniteSemiring const& s, element_type a) {
    for (auto b : all_of(s)) {
      if (s.add(a, b) == s.zero()) {
        return true;
      }
    }
    return false;
  }

  // Least fixed point of X -> X u {a op b : a, b in X} above gens, computed
  // by naive iteration to stability.
  inline std::set<element_type> oracle_closure(FiniteSemiring const& s, elems const& gens, bool mult) {
    std::set<element_type> x(gens.begin(), gens.end());
    for (bool changed = true; changed;) {
      changed   = false;
      auto copy = x;
      for (auto a : copy) {
        for (auto b : copy) {
          changed = x.insert(mult ? s.mul(a, b) : s.add(a, b)).second || changed;
        }
      }
    }
    return x;
  }

  inline bool oracle_axioms(FiniteSemiring const& s) {
    auto const e = all_of(s);
    for (auto a : e) {
      if (s.add(s.zero(), a) != a || s.mul(s.one(), a) != a || s.mul(a, s.one()) != a
          || s.mul(s.zero(), a) != s.zero() || s.mul(a, s.zero()) != s.zero()) {
        return false;
      }
      for (auto b : e) {
        if (s.add(a, b) != s.add(b, a)) {
          return false;
        }
        for (auto c : e) {
          if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))
              || s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))
              || s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))
              || s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Brute-force isomorphism test over all n! bijections.
  inline bool oracle_isomorphic(FiniteSemiring const& s, FiniteSemiring const& t) {
    if (s.order() != t.order()) {
      return false;
    }
    auto phi = all_of(t);
    do {
      bool ok = phi[s.zero()] == t.zero() && phi[s.one()] == t.one();
      for (element_type a = 0; ok && a < s.order(); ++a) {
        for (element_type b = 0; ok && b < s.order(); ++b) {
          ok = phi[s.add(a, b)] == t.add(phi[a], phi[b]) && phi[s.mul(a, b)] == t.mul(phi[a], phi[b]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(phi.begin(), phi.end()));
    return false;
  }

  inline FiniteSemiring random_relabel(FiniteSemiring const& s, std::mt19937& rng) {
    auto perm = all_of(s);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const n = s.order();
    FiniteSemiring::table_type add(n * n), mul(n * n);
    std::vector<std::string>   labels(n);
    for (element_type a = 0; a < n; ++a) {
      labels[perm[a]] = s.label(a);
      for (element_type b = 0; b < n; ++b) {
        add[perm[a] * n + perm[b]] = perm[s.add(a, b)];
        mul[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
      }
    }
    return FiniteSemiring(labels, add, mul, perm[s.zero()], perm[s.one()]);
  }

  // Tables of every semiring of order n up to isomorphism, counted by a
  // search that shares nothing with the staged census: all table pairs for
  // n = 3, and for n = 4 all pairs with 0 and 1 placed at indices 0 and 1.
  // Classes are separated by the least encoding over all bijections.
  struct BruteForceCensus {
    std::size_t                           order;
    std::set<std::vector<element_type>>   classes;
  };

  namespace detail {

    inline std::vector<element_type> encode(std::size_t n, elems const& add, elems const& mul, element_type z,
                                            element_type o, elems const& perm) {
      std::vector<element_type> out{perm[z], perm[o]};
      out.resize(2 + 2 * n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out[2 + perm[a] * n + perm[b]]         = perm[add[a * n + b]];
          out[2 + n * n + perm[a] * n + perm[b]] = perm[mul[a * n + b]];
        }
      }
      return out;
    }

    inline std::vector<element_type> least_encoding(std::size_t n, elems const& add, elems const& mul,
                                                    element_type z, element_type o) {
      elems perm(n);
      std::iota(perm.begin(), perm.end(), element_type{0});
      std::vector<element_type> best;
      do {
        auto e = encode(n, add, mul, z, o, perm);
        if (best.empty() || e < best) {
          best = std::move(e);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }

    inline bool check(std::size_t n, elems const& add, elems const& mul, element_type z, element_type o) {
      for (std::size_t a = 0; a < n; ++a) {
        if (mul[o * n + a] != a || mul[a * n + o] != a || mul[z * n + a] != z || mul[a * n + z] != z) {
          return false;
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]
                || mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]]
                || mul[add[a * n + b] * n + c] != add[mul[a * n + c] * n + mul[b * n + c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    inline bool add_monoid(std::size_t n, elems const& add, element_type z) {
      for (std::size_t a = 0; a < n; ++a) {
        if (add[z * n + a] != a) {
          return false;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (add[a * n + b] != add[b * n + a]) {
            return false;
          }
          for (std::size_t c = 0; c < n; ++c) {
            if (add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    // Decodes `code` as base-n digits into the given cells of t.
    inline void decode(std::uint64_t code, std::size_t n, std::vector<std::size_t> const& cells, elems& t) {
      for (auto c : cells) {
        t[c] = static_cast<element_type>(code % n);
        code /= n;
      }
    }

  }  // namespace detail

  inline BruteForceCensus brute_force_census(std::size_t n) {
    using namespace detail;
    BruteForceCensus out{n, {}};
    std::uint64_t    cells_total = 1;
    std::vector<std::size_t> all_cells(n * n);
    std::iota(all_cells.begin(), all_cells.end(), std::size_t{0});

    if (n == 3) {
      for (std::size_t k = 0; k < n * n; ++k) {
        cells_total *= n;
      }
      elems add(n * n), mul(n * n);
      for (std::uint64_t ac = 0; ac < cells_total; ++ac) {
        decode(ac, n, all_cells, add);
        for (element_type z = 0; z < n; ++z) {
          if (!add_monoid(n, add, z)) {
            continue;
          }
          for (std::uint64_t mc = 0; mc < cells_total; ++mc) {
            decode(mc, n, all_cells, mul);
            for (element_type o = 0; o < n; ++o) {
              if (o != z && check(n, add, mul, z, o)) {
                out.classes.insert(least_encoding(n, add, mul, z, o));
              }
            }
          }
        }
      }
      return out;
    }

    // 0 at index 0 and 1 at index 1; every other cell free.
    std::vector<std::size_t> add_cells, mul_cells;
    for (std::size_t a = 1; a < n; ++a) {
      for (std::size_t b = 1; b < n; ++b) {
        add_cells.push_back(a * n + b);
        if (a >= 2 && b >= 2) {
          mul_cells.push_back(a * n + b);
        }
      }
    }
    std::uint64_t add_total = 1, mul_total = 1;
    for (std::size_t k = 0; k < add_cells.size(); ++k) {
      add_total *= n;
    }
    for (std::size_t k = 0; k < mul_cells.size(); ++k) {
      mul_total *= n;
    }
    elems add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      add[a] = add[a * n] = static_cast<element_type>(a);
      mul[a] = mul[a * n] = 0;
      mul[n + a] = mul[a * n + 1] = static_cast<element_type>(a);
    }
    for (std::uint64_t ac = 0; ac < add_total; ++ac) {
      decode(ac, n, add_cells, add);
      if (!add_monoid(n, add, 0)) {
        continue;
      }
      for (std::uint64_t mc = 0; mc < mul_total; ++mc) {
        decode(mc, n, mul_cells, mul);
        if (check(n, add, mul, 0, 1)) {
          out.classes.insert(least_encoding(n, add, mul, 0, 1));
        }
      }
    }
    return out;
  }

}  // namespace idemgen::testing

#endif  // IDEMGEN_TESTS_SUPPORT_HPP_
