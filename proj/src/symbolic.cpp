#include "idemgen/symbolic.hpp"

#include <fmt/format.h>

namespace idemgen {

  std::string to_string(SymbolicNat n) {
    return std::to_string(n.value);
  }

  std::string to_string(SymbolicTriple const& t) {
    std::string out;
    auto term = [&out](std::uint64_t k, char const* name) {
      if (k == 0) {
        return;
      }
      if (!out.empty()) {
        out += '+';
      }
      if (*name == '\0') {
        out += std::to_string(k);
      } else {
        out += k == 1 ? std::string(name) : fmt::format("{}{}", k, name);
      }
    };
    term(t.a, "");
    term(t.b, "x");
    term(t.c, "y");
    return out.empty() ? "0" : out;
  }

  std::vector<SymbolicNat> NatModel::window(std::uint64_t bound) const {
    std::vector<element> out;
    for (std::uint64_t v = 0; v <= bound; ++v) {
      out.push_back({v});
    }
    return out;
  }

  bool NatModel::is_idempotent(element p) const {
    return p.value <= 1;
  }

  std::vector<SymbolicNat> NatModel::idempotents() const {
    return {zero(), one()};
  }

  bool NatModel::is_nilpotent(element p) const {
    return p.value == 0;
  }

  std::vector<SymbolicNat> NatModel::additive_certificate(element p) const {
    return std::vector<element>(p.value, one());
  }

  SymbolicTriple TripleModel::mul(element const& p, element const& q) const {
    return {p.a * q.a,
            p.a * q.b + q.a * p.b + p.b * q.b + p.b * q.c,
            p.a * q.c + q.a * p.c + p.c * q.b + p.c * q.c};
  }

  std::vector<SymbolicTriple> TripleModel::window(std::uint64_t bound) const {
    std::vector<element> out;
    for (std::uint64_t a = 0; a <= bound; ++a) {
      for (std::uint64_t b = 0; b <= bound; ++b) {
        for (std::uint64_t c = 0; c <= bound; ++c) {
          out.push_back({a, b, c});
        }
      }
    }
    return out;
  }

  bool TripleModel::is_idempotent(element const& p) const {
    if (p.a == 1) {
      return p.b == 0 && p.c == 0;
    }
    return p.a == 0 && (p.b + p.c <= 1);
  }

  std::vector<SymbolicTriple> TripleModel::idempotents() const {
    return {zero(), one(), x(), y()};
  }

  bool TripleModel::is_nilpotent(element const& p) const {
    return p == zero();
  }

  bool TripleModel::is_central(element const& p, std::uint64_t bound) const {
    for (auto const& q : window(bound)) {
      if (mul(p, q) != mul(q, p)) {
        return false;
      }
    }
    return true;
  }

  std::vector<SymbolicTriple> TripleModel::additive_certificate(element const& p) const {
    std::vector<element> out;
    out.insert(out.end(), p.a, one());
    out.insert(out.end(), p.b, x());
    out.insert(out.end(), p.c, y());
    return out;
  }

  std::optional<SymbolicTriple> TripleModel::additive_difference(element const& p,
                                                                 element const& target) const {
    if (p.a > target.a || p.b > target.b || p.c > target.c) {
      return std::nullopt;
    }
    return element{target.a - p.a, target.b - p.b, target.c - p.c};
  }

}  // namespace idemgen
