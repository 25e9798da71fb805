#include "idemgen/finite_semiring.hpp"

#include <limits>
#include <unordered_set>

#include <fmt/format.h>

#include "idemgen/errors.hpp"

namespace idemgen {

  namespace {
    constexpr std::size_t max_order = std::numeric_limits<element_type>::max();
  }

  FiniteSemiring::FiniteSemiring(std::vector<std::string> labels,
                                 table_type               add,
                                 table_type               mul,
                                 element_type             zero,
                                 element_type             one)
      : _order(labels.size()),
        _labels(std::move(labels)),
        _add(std::move(add)),
        _mul(std::move(mul)),
        _zero(zero),
        _one(one) {
    if (_order == 0) {
      throw StructureError("a semiring needs at least one element");
    }
    if (_order > max_order) {
      throw StructureError(fmt::format("order {} exceeds the supported maximum {}",
                                       _order, max_order));
    }
    if (_add.size() != _order * _order || _mul.size() != _order * _order) {
      throw StructureError(fmt::format(
          "tables must have {} entries for order {}", _order * _order, _order));
    }
    for (std::size_t i = 0; i < _add.size(); ++i) {
      if (_add[i] >= _order || _mul[i] >= _order) {
        throw StructureError(fmt::format("table entry at row {}, column {} is out of range",
                                         i / _order, i % _order));
      }
    }
    if (_zero >= _order || _one >= _order) {
      throw StructureError("zero or one is out of range");
    }
    std::unordered_set<std::string> seen;
    for (auto const& l : _labels) {
      if (l.empty()) {
        throw StructureError("empty element label");
      }
      if (!seen.insert(l).second) {
        throw StructureError(fmt::format("duplicate element label '{}'", l));
      }
    }
  }

  FiniteSemiring FiniteSemiring::validated(std::vector<std::string> labels,
                                           table_type               add,
                                           table_type               mul,
                                           element_type             zero,
                                           element_type             one) {
    FiniteSemiring s(std::move(labels), std::move(add), std::move(mul), zero, one);
    auto report = validate(s);
    if (!report.valid) {
      auto const& v = report.violations.front();
      throw AxiomError(fmt::format("{} fails at ({}, {}, {})",
                                   v.axiom,
                                   s.label(v.witness[0]),
                                   s.label(v.witness[1]),
                                   s.label(v.witness[2])));
    }
    return s;
  }

  std::optional<element_type> FiniteSemiring::find(std::string_view label) const {
    for (std::size_t i = 0; i < _order; ++i) {
      if (_labels[i] == label) {
        return static_cast<element_type>(i);
      }
    }
    return std::nullopt;
  }

  element_type FiniteSemiring::at(std::string_view label) const {
    auto a = find(label);
    if (!a) {
      throw DomainError(fmt::format("unknown element label '{}'", label));
    }
    return *a;
  }

  bool FiniteSemiring::is_commutative() const noexcept {
    for (std::size_t a = 0; a < _order; ++a) {
      for (std::size_t b = a + 1; b < _order; ++b) {
        if (_mul[a * _order + b] != _mul[b * _order + a]) {
          return false;
        }
      }
    }
    return true;
  }

  AxiomReport validate(FiniteSemiring const& s) {
    AxiomReport r;
    auto const  n = static_cast<element_type>(s.order());
    auto        fail = [&r](char const* axiom, element_type a, element_type b, element_type c) {
      r.violations.push_back({axiom, {a, b, c}});
    };
    auto const z = s.zero();
    auto const o = s.one();

    for (element_type a = 0; a < n; ++a) {
      if (s.add(z, a) != a || s.add(a, z) != a) {
        fail("additive-identity", a, a, a);
      }
      if (s.mul(o, a) != a || s.mul(a, o) != a) {
        fail("multiplicative-identity", a, a, a);
      }
      if (s.mul(z, a) != z) {
        fail("left-annihilation", a, a, a);
      }
      if (s.mul(a, z) != z) {
        fail("right-annihilation", a, a, a);
      }
      for (element_type b = 0; b < n; ++b) {
        if (s.add(a, b) != s.add(b, a)) {
          fail("additive-commutativity", a, b, b);
        }
        for (element_type c = 0; c < n; ++c) {
          if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) {
            fail("additive-associativity", a, b, c);
          }
          if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
            fail("multiplicative-associativity", a, b, c);
          }
          if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) {
            fail("left-distributivity", a, b, c);
          }
          if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c))) {
            fail("right-distributivity", a, b, c);
          }
        }
      }
    }
    r.valid = r.violations.empty();
    return r;
  }

  AxiomReport validate(std::vector<std::vector<int>> const& add,
                       std::vector<std::vector<int>> const& mul,
                       int                                  zero,
                       int                                  one) {
    auto const n = add.size();
    if (n == 0 || mul.size() != n) {
      throw StructureError("tables must be non-empty and of equal order");
    }
    auto flatten = [n](std::vector<std::vector<int>> const& rows, char const* name) {
      FiniteSemiring::table_type flat;
      flat.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
          throw StructureError(fmt::format("{} table row {} has {} entries, expected {}",
                                           name, i, rows[i].size(), n));
        }
        for (std::size_t j = 0; j < n; ++j) {
          int v = rows[i][j];
          if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw StructureError(fmt::format(
                "{} table entry ({}, {}) = {} is out of range", name, i, j, v));
          }
          flat.push_back(static_cast<element_type>(v));
        }
      }
      return flat;
    };
    if (zero < 0 || one < 0 || static_cast<std::size_t>(zero) >= n
        || static_cast<std::size_t>(one) >= n) {
      throw StructureError("zero or one is out of range");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
    }
    FiniteSemiring s(std::move(labels),
                     flatten(add, "add"),
                     flatten(mul, "mul"),
                     static_cast<element_type>(zero),
                     static_cast<element_type>(one));
    return validate(s);
  }

}  // namespace idemgen
