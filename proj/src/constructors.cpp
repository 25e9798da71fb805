#include "idemgen/constructors.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "idemgen/errors.hpp"
#include "idemgen/presentation.hpp"

namespace idemgen {

  namespace {

    // Index order used by all constructors: the zero code, the one code, then
    // every other code ascending.
    struct CodeOrder {
      std::vector<std::size_t>  code_of;   // index -> code
      std::vector<element_type> index_of;  // code -> index
    };

    CodeOrder order_codes(std::size_t total, std::size_t zero_code, std::size_t one_code) {
      CodeOrder o;
      o.index_of.resize(total);
      o.code_of.push_back(zero_code);
      if (one_code != zero_code) {
        o.code_of.push_back(one_code);
      }
      for (std::size_t c = 0; c < total; ++c) {
        if (c != zero_code && c != one_code) {
          o.code_of.push_back(c);
        }
      }
      for (std::size_t i = 0; i < total; ++i) {
        o.index_of[o.code_of[i]] = static_cast<element_type>(i);
      }
      return o;
    }

    // Builds a semiring on codes 0..total-1 from code-level operations.
    template <typename Add, typename Mul, typename Label>
    FiniteSemiring from_codes(std::size_t total,
                              std::size_t zero_code,
                              std::size_t one_code,
                              Add&&       add,
                              Mul&&       mul,
                              Label&&     label) {
      auto const                 o = order_codes(total, zero_code, one_code);
      FiniteSemiring::table_type at(total * total), mt(total * total);
      std::vector<std::string>   labels;
      labels.reserve(total);
      for (std::size_t i = 0; i < total; ++i) {
        labels.push_back(label(o.code_of[i]));
        for (std::size_t j = 0; j < total; ++j) {
          at[i * total + j] = o.index_of[add(o.code_of[i], o.code_of[j])];
          mt[i * total + j] = o.index_of[mul(o.code_of[i], o.code_of[j])];
        }
      }
      return FiniteSemiring(std::move(labels), std::move(at), std::move(mt), 0,
                            o.code_of.size() > 1 ? 1 : 0);
    }

    std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
      std::size_t r = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) {
          return cap + 1;
        }
        r *= base;
      }
      return r;
    }

    // Square matrices whose non-fixed positions are listed in `free`; every
    // other position holds zero.
    FiniteSemiring matrices(FiniteSemiring const&                            s,
                            unsigned                                         n,
                            std::vector<std::pair<unsigned, unsigned>> const& free,
                            std::size_t                                      cap) {
      if (n == 0) {
        throw DomainError("matrix size must be at least 1");
      }
      auto const q     = s.order();
      auto const total = checked_power(q, free.size(), cap);
      if (total > cap) {
        throw DomainError(fmt::format("{}^{} elements exceed the size cap {}", q, free.size(), cap));
      }
      auto decode = [&](std::size_t code) {
        std::vector<element_type> m(n * n, s.zero());
        for (std::size_t k = 0; k < free.size(); ++k) {
          m[free[k].first * n + free[k].second] = static_cast<element_type>(code % q);
          code /= q;
        }
        return m;
      };
      auto encode = [&](std::vector<element_type> const& m) {
        std::size_t code = 0;
        for (std::size_t k = free.size(); k-- > 0;) {
          code = code * q + m[free[k].first * n + free[k].second];
        }
        return code;
      };
      std::vector<std::vector<element_type>> entries(total);
      for (std::size_t c = 0; c < total; ++c) {
        entries[c] = decode(c);
      }
      std::vector<element_type> zero(n * n, s.zero()), one(n * n, s.zero());
      for (unsigned i = 0; i < n; ++i) {
        one[i * n + i] = s.one();
      }
      auto add = [&](std::size_t a, std::size_t b) {
        std::vector<element_type> m(n * n);
        for (std::size_t k = 0; k < n * n; ++k) {
          m[k] = s.add(entries[a][k], entries[b][k]);
        }
        return encode(m);
      };
      auto mul = [&](std::size_t a, std::size_t b) {
        std::vector<element_type> m(n * n);
        for (unsigned i = 0; i < n; ++i) {
          for (unsigned j = 0; j < n; ++j) {
            element_type acc = s.zero();
            for (unsigned k = 0; k < n; ++k) {
              acc = s.add(acc, s.mul(entries[a][i * n + k], entries[b][k * n + j]));
            }
            m[i * n + j] = acc;
          }
        }
        return encode(m);
      };
      auto label = [&](std::size_t c) {
        std::string out = "[";
        for (unsigned i = 0; i < n; ++i) {
          for (unsigned j = 0; j < n; ++j) {
            if (j > 0) {
              out += ' ';
            }
            out += s.label(entries[c][i * n + j]);
          }
          if (i + 1 < n) {
            out += ';';
          }
        }
        return out + "]";
      };
      return from_codes(total, encode(zero), encode(one), add, mul, label);
    }

    std::string poly_label(std::vector<unsigned> const& coeffs) {
      std::string out;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        auto c = coeffs[i];
        if (c == 0) {
          continue;
        }
        if (!out.empty()) {
          out += '+';
        }
        if (i == 0) {
          out += std::to_string(c);
          continue;
        }
        if (c != 1) {
          out += std::to_string(c);
        }
        out += i == 1 ? "x" : fmt::format("x^{}", i);
      }
      return out.empty() ? "0" : out;
    }

    unsigned parse_unsigned(std::string_view s, std::string_view what) {
      unsigned v   = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
        throw DomainError(fmt::format("invalid {} '{}' in preset", what, s));
      }
      return v;
    }

    std::string_view strip_parens(std::string_view s) {
      while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
      }
      return s;
    }

    std::pair<std::string_view, std::string_view> split_top_level(std::string_view s) {
      int depth = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
          ++depth;
        } else if (s[i] == ')') {
          --depth;
        } else if (s[i] == ',' && depth == 0) {
          return {strip_parens(s.substr(0, i)), strip_parens(s.substr(i + 1))};
        }
      }
      throw DomainError(fmt::format("preset arguments '{}' need two comma separated parts", s));
    }

  }  // namespace

  FiniteSemiring trivial_semiring() {
    return FiniteSemiring({"0"}, {0}, {0}, 0, 0);
  }

  FiniteSemiring boolean_semiring() {
    return FiniteSemiring({"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
  }

  FiniteSemiring zmod(unsigned n) {
    if (n == 0) {
      throw DomainError("zmod needs n >= 1");
    }
    return from_codes(
        n, 0, 1 % n,
        [n](std::size_t a, std::size_t b) { return (a + b) % n; },
        [n](std::size_t a, std::size_t b) { return (a * b) % n; },
        [](std::size_t a) { return std::to_string(a); });
  }

  FiniteSemiring poly_quotient(FiniteSemiring const& base, std::vector<unsigned> const& modulus) {
    auto const n = static_cast<unsigned>(base.order());
    if (!(base.add_table().size() == zmod(n).add_table().size()
          && std::ranges::equal(base.add_table(), zmod(n).add_table())
          && std::ranges::equal(base.mul_table(), zmod(n).mul_table())
          && base.zero() == 0 && base.one() == 1 % n)) {
      throw DomainError("polynomial quotients need a base of the form zmod(n)");
    }
    if (modulus.size() < 2) {
      throw DomainError("the modulus must have degree at least 1");
    }
    if (modulus.back() % n != 1 % n) {
      throw DomainError("the modulus must be monic");
    }
    auto const d     = modulus.size() - 1;
    auto const total = checked_power(n, d, default_size_cap * 16);
    if (total > default_size_cap * 16) {
      throw DomainError("polynomial quotient is too large");
    }
    auto decode = [n, d](std::size_t code) {
      std::vector<unsigned> c(d);
      for (std::size_t i = 0; i < d; ++i) {
        c[i] = code % n;
        code /= n;
      }
      return c;
    };
    auto encode = [n](std::vector<unsigned> const& c) {
      std::size_t code = 0;
      for (std::size_t i = c.size(); i-- > 0;) {
        code = code * n + c[i];
      }
      return code;
    };
    auto add = [&](std::size_t a, std::size_t b) {
      auto x = decode(a), y = decode(b);
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = (x[i] + y[i]) % n;
      }
      return encode(x);
    };
    auto mul = [&](std::size_t a, std::size_t b) {
      auto const            x = decode(a);
      auto const            y = decode(b);
      std::vector<unsigned> p(2 * d - 1, 0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          p[i + j] = (p[i + j] + x[i] * y[j]) % n;
        }
      }
      // Subtract c x^(k-d) modulus for each leading coefficient c.
      for (std::size_t k = p.size(); k-- > d;) {
        auto const c = p[k];
        if (c == 0) {
          continue;
        }
        for (std::size_t i = 0; i <= d; ++i) {
          auto const sub = (c * (modulus[i] % n)) % n;
          p[k - d + i]   = (p[k - d + i] + n - sub) % n;
        }
      }
      p.resize(d);
      return encode(p);
    };
    return from_codes(total, 0, 1 % total, add, mul,
                      [&](std::size_t c) { return poly_label(decode(c)); });
  }

  FiniteSemiring matrix_semiring(FiniteSemiring const& s, unsigned n, std::size_t cap) {
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        free.emplace_back(i, j);
      }
    }
    return matrices(s, n, free, cap);
  }

  FiniteSemiring triangular_semiring(FiniteSemiring const& s, unsigned n, std::size_t cap) {
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i; j < n; ++j) {
        free.emplace_back(i, j);
      }
    }
    return matrices(s, n, free, cap);
  }

  FiniteSemiring direct_product(FiniteSemiring const& s, FiniteSemiring const& t) {
    auto const m     = t.order();
    auto const total = s.order() * m;
    auto       add   = [&](std::size_t a, std::size_t b) {
      return static_cast<std::size_t>(s.add(a / m, b / m)) * m + t.add(a % m, b % m);
    };
    auto mul = [&](std::size_t a, std::size_t b) {
      return static_cast<std::size_t>(s.mul(a / m, b / m)) * m + t.mul(a % m, b % m);
    };
    auto label = [&](std::size_t c) {
      return fmt::format("({},{})", s.label(c / m), t.label(c % m));
    };
    return from_codes(total,
                      static_cast<std::size_t>(s.zero()) * m + t.zero(),
                      static_cast<std::size_t>(s.one()) * m + t.one(),
                      add, mul, label);
  }

  FiniteSemiring preset(std::string_view name) {
    auto const colon = name.find(':');
    auto const head  = name.substr(0, colon);
    auto const args  = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    bool const bare  = colon == std::string_view::npos;

    if (bare) {
      if (name == "bool") {
        return boolean_semiring();
      } else if (name == "trivial") {
        return trivial_semiring();
      } else if (name == "t2b") {
        return triangular_semiring(boolean_semiring(), 2);
      } else if (name == "m2z2") {
        return matrix_semiring(zmod(2), 2);
      } else if (name == "z2x-sq") {
        return poly_quotient(zmod(2), {0, 0, 1});
      } else if (name == "z3x-sqm1") {
        return poly_quotient(zmod(3), {2, 0, 1});
      } else if (name == "bxy-presentation") {
        auto r = bxy_presentation();
        if (!r.semiring) {
          throw InternalError("the B[x,y] presentation did not close within its bound");
        }
        return *r.semiring;
      }
    } else if (head == "zmod") {
      return zmod(parse_unsigned(args, "modulus"));
    } else if (head == "product") {
      auto [a, b] = split_top_level(args);
      return direct_product(preset(a), preset(b));
    } else if (head == "matrix" || head == "triangular") {
      auto [size, inner] = split_top_level(args);
      auto const k       = parse_unsigned(size, "matrix size");
      return head == "matrix" ? matrix_semiring(preset(inner), k)
                              : triangular_semiring(preset(inner), k);
    }
    if (is_symbolic_preset(name)) {
      throw DomainError(fmt::format("'{}' is a symbolic infinite model, not a finite table", name));
    }
    throw DomainError(fmt::format("unknown preset '{}'", name));
  }

  std::vector<std::string> preset_names() {
    return {"bool", "trivial", "t2b", "m2z2", "z2x-sq", "z3x-sqm1", "bxy-presentation",
            "nat", "nn-triple"};
  }

  bool is_symbolic_preset(std::string_view name) {
    return name == "nat" || name == "nn-triple";
  }

}  // namespace idemgen
