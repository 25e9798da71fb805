#include "idemgen/peirce.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "idemgen/classify.hpp"
#include "idemgen/complement.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/errors.hpp"
#include "idemgen/isomorphism.hpp"

namespace idemgen {

  std::string_view to_string(FactorClass c) {
    switch (c) {
      case FactorClass::iso_to_boolean:
        return "iso-to-B";
      case FactorClass::iso_to_z2:
        return "iso-to-Z2";
      case FactorClass::other_no_nontrivial_idempotents:
        return "other-no-nontrivial-idempotents";
      case FactorClass::other:
        break;
    }
    return "other";
  }

  FactorClass classify_factor(FiniteSemiring const& factor) {
    if (factor.order() == 2) {
      if (isomorphic(factor, boolean_semiring())) {
        return FactorClass::iso_to_boolean;
      }
      if (isomorphic(factor, zmod(2))) {
        return FactorClass::iso_to_z2;
      }
    }
    for (std::size_t i = 0; i < factor.order(); ++i) {
      auto const e = static_cast<element_type>(i);
      if (e != factor.zero() && e != factor.one() && is_idempotent(factor, e)) {
        return FactorClass::other;
      }
    }
    return FactorClass::other_no_nontrivial_idempotents;
  }

  namespace {

    // The subsemiring e S with identity e; zero first, e second, then the rest
    // by index in s.
    std::pair<FiniteSemiring, std::vector<element_type>> corner(FiniteSemiring const& s,
                                                               element_type          e) {
      std::vector<element_type> carrier;
      for (std::size_t i = 0; i < s.order(); ++i) {
        carrier.push_back(s.mul(e, static_cast<element_type>(i)));
      }
      std::sort(carrier.begin(), carrier.end());
      carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
      std::stable_partition(carrier.begin(), carrier.end(), [&](element_type a) {
        return a == s.zero() || a == e;
      });
      if (carrier.size() > 1 && carrier[0] != s.zero()) {
        std::swap(carrier[0], carrier[1]);
      }
      std::map<element_type, element_type> index;
      for (std::size_t j = 0; j < carrier.size(); ++j) {
        index[carrier[j]] = static_cast<element_type>(j);
      }
      auto const                 m = carrier.size();
      FiniteSemiring::table_type add(m * m), mul(m * m);
      std::vector<std::string>   labels;
      for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(s.label(carrier[i]));
        for (std::size_t j = 0; j < m; ++j) {
          add[i * m + j] = index.at(s.add(carrier[i], carrier[j]));
          mul[i * m + j] = index.at(s.mul(carrier[i], carrier[j]));
        }
      }
      FiniteSemiring f(std::move(labels), std::move(add), std::move(mul), index.at(s.zero()),
                       index.at(e));
      return {std::move(f), std::move(carrier)};
    }

  }  // namespace

  PeirceResult peirce_decompose(FiniteSemiring const& s) {
    auto const n = s.order();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto const a = static_cast<element_type>(i);
        auto const b = static_cast<element_type>(j);
        if (s.mul(a, b) != s.mul(b, a)) {
          throw DomainError(fmt::format("not commutative: '{}' and '{}' do not commute",
                                        s.label(a), s.label(b)));
        }
      }
    }
    std::vector<element_type> idempotents;
    for (std::size_t i = 0; i < n; ++i) {
      auto const e = static_cast<element_type>(i);
      if (is_idempotent(s, e)) {
        if (!orthogonal_complement(s, e)) {
          throw DomainError(fmt::format("idempotent '{}' has no orthogonal complement",
                                        s.label(e)));
        }
        idempotents.push_back(e);
      }
    }

    PeirceResult r;
    for (auto e : idempotents) {
      if (e == s.zero()) {
        continue;
      }
      bool minimal = std::none_of(idempotents.begin(), idempotents.end(), [&](element_type f) {
        return f != s.zero() && f != e && s.mul(e, f) == f;
      });
      if (minimal) {
        r.primitives.push_back(e);
      }
    }

    element_type sum = s.zero();
    for (std::size_t i = 0; i < r.primitives.size(); ++i) {
      sum = s.add(sum, r.primitives[i]);
      for (std::size_t j = i + 1; j < r.primitives.size(); ++j) {
        if (s.mul(r.primitives[i], r.primitives[j]) != s.zero()) {
          throw InternalError(fmt::format("primitive idempotents '{}' and '{}' are not orthogonal",
                                          s.label(r.primitives[i]), s.label(r.primitives[j])));
        }
      }
    }
    if (sum != s.one()) {
      throw InternalError(fmt::format("primitive idempotents sum to '{}', not 1", s.label(sum)));
    }

    std::vector<std::map<element_type, element_type>> position;
    for (auto e : r.primitives) {
      auto [factor, carrier] = corner(s, e);
      std::map<element_type, element_type> pos;
      for (std::size_t j = 0; j < carrier.size(); ++j) {
        pos[carrier[j]] = static_cast<element_type>(j);
      }
      position.push_back(std::move(pos));
      r.factor_classification.push_back(classify_factor(factor));
      r.factors.push_back(std::move(factor));
      r.carriers.push_back(std::move(carrier));
    }

    std::size_t product_order = 1;
    for (auto const& f : r.factors) {
      product_order *= f.order();
    }
    if (product_order != n) {
      throw InternalError(fmt::format("factor orders multiply to {}, not {}", product_order, n));
    }
    r.iso.resize(n);
    std::map<std::vector<element_type>, element_type> inverse;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < r.primitives.size(); ++i) {
        r.iso[a].push_back(position[i].at(s.mul(r.primitives[i], static_cast<element_type>(a))));
      }
      if (!inverse.emplace(r.iso[a], static_cast<element_type>(a)).second) {
        throw InternalError("Peirce map is not injective");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto const sum_ab  = s.add(static_cast<element_type>(a), static_cast<element_type>(b));
        auto const prod_ab = s.mul(static_cast<element_type>(a), static_cast<element_type>(b));
        for (std::size_t i = 0; i < r.factors.size(); ++i) {
          if (r.iso[sum_ab][i] != r.factors[i].add(r.iso[a][i], r.iso[b][i])
              || r.iso[prod_ab][i] != r.factors[i].mul(r.iso[a][i], r.iso[b][i])) {
            throw InternalError("Peirce map does not preserve the operations");
          }
        }
      }
    }
    return r;
  }

}  // namespace idemgen
