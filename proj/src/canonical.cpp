#include "idemgen/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "idemgen/errors.hpp"
#include "idemgen/isomorphism.hpp"

namespace idemgen {

  namespace {

    template <typename T>
    std::vector<unsigned> rank(std::vector<T> const& sig) {
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<unsigned> out(sig.size());
      for (std::size_t i = 0; i < sig.size(); ++i) {
        out[i] = static_cast<unsigned>(std::lower_bound(sorted.begin(), sorted.end(), sig[i])
                                       - sorted.begin());
      }
      return out;
    }

    std::vector<unsigned> refined_colours(FiniteSemiring const& s) {
      auto const n      = s.order();
      auto       colour = rank(element_invariants(s));
      auto       count  = [](std::vector<unsigned> const& c) {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
      };
      using neighbour = std::array<unsigned, 4>;
      while (true) {
        std::vector<std::pair<unsigned, std::vector<neighbour>>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
          auto const a = static_cast<element_type>(i);
          sig[i].first = colour[i];
          for (std::size_t j = 0; j < n; ++j) {
            auto const b = static_cast<element_type>(j);
            sig[i].second.push_back(
                {colour[j], colour[s.add(a, b)], colour[s.mul(a, b)], colour[s.mul(b, a)]});
          }
          std::sort(sig[i].second.begin(), sig[i].second.end());
        }
        auto next = rank(sig);
        if (count(next) == count(colour)) {
          return next;
        }
        colour = std::move(next);
      }
    }

    void append(std::vector<std::uint8_t>& out, std::size_t v) {
      out.push_back(static_cast<std::uint8_t>(v >> 8));
      out.push_back(static_cast<std::uint8_t>(v & 0xff));
    }

    // Tables of s relabeled by perm, as key bytes.
    std::vector<std::uint8_t> relabeled_bytes(FiniteSemiring const&            s,
                                              std::vector<element_type> const& perm,
                                              std::vector<element_type> const& inverse) {
      auto const                n = s.order();
      std::vector<std::uint8_t> out;
      out.reserve(4 * n * n + 2);
      append(out, n);
      for (auto const op : {0, 1}) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            auto const a = inverse[i];
            auto const b = inverse[j];
            append(out, perm[op == 0 ? s.add(a, b) : s.mul(a, b)]);
          }
        }
      }
      return out;
    }

  }  // namespace

  std::string CanonicalKey::hex() const {
    std::string out;
    for (auto b : bytes) {
      out += fmt::format("{:02x}", b);
    }
    return out;
  }

  std::vector<element_type> canonical_labeling(FiniteSemiring const& s) {
    auto const n      = s.order();
    auto const colour = refined_colours(s);

    std::vector<element_type> rest;
    for (std::size_t i = 0; i < n; ++i) {
      auto const a = static_cast<element_type>(i);
      if (a != s.zero() && a != s.one()) {
        rest.push_back(a);
      }
    }
    std::stable_sort(rest.begin(), rest.end(),
                     [&](element_type a, element_type b) { return colour[a] < colour[b]; });

    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) in rest
    std::size_t                                      candidates = 1;
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && colour[rest[j]] == colour[rest[i]]) {
        ++j;
      }
      groups.emplace_back(i, j);
      for (std::size_t k = 2; k <= j - i; ++k) {
        candidates *= k;
        if (candidates > max_canonical_candidates) {
          throw DomainError(fmt::format(
              "canonical form of this order-{} semiring needs more than {} relabelings", n,
              max_canonical_candidates));
        }
      }
      i = j;
    }

    // order[k] is the element placed at new index k.
    std::vector<element_type> order;
    order.push_back(s.zero());
    if (s.one() != s.zero()) {
      order.push_back(s.one());
    }
    auto const offset = order.size();
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<element_type> perm(n), best_perm;
    std::vector<std::uint8_t> best;
    auto evaluate = [&]() {
      for (std::size_t k = 0; k < n; ++k) {
        perm[order[k]] = static_cast<element_type>(k);
      }
      auto bytes = relabeled_bytes(s, perm, order);
      if (best.empty() || bytes < best) {
        best      = std::move(bytes);
        best_perm = perm;
      }
    };
    auto recurse = [&](auto&& self, std::size_t g) -> void {
      if (g == groups.size()) {
        evaluate();
        return;
      }
      auto const first = order.begin() + offset + groups[g].first;
      auto const last  = order.begin() + offset + groups[g].second;
      std::sort(first, last);
      do {
        self(self, g + 1);
      } while (std::next_permutation(first, last));
    };
    recurse(recurse, 0);
    return best_perm;
  }

  CanonicalKey canonical_form(FiniteSemiring const& s) {
    auto const                perm = canonical_labeling(s);
    std::vector<element_type> inverse(s.order());
    for (std::size_t a = 0; a < s.order(); ++a) {
      inverse[perm[a]] = static_cast<element_type>(a);
    }
    return {relabeled_bytes(s, perm, inverse)};
  }

  FiniteSemiring canonical_representative(FiniteSemiring const& s) {
    auto const                perm = canonical_labeling(s);
    auto                      r    = relabel(s, perm);
    std::vector<std::string>  labels;
    for (std::size_t i = 0; i < s.order(); ++i) {
      labels.push_back(std::to_string(i));
    }
    return FiniteSemiring(std::move(labels),
                          {r.add_table().begin(), r.add_table().end()},
                          {r.mul_table().begin(), r.mul_table().end()},
                          r.zero(),
                          r.one());
  }

  CanonicalKey table_bytes(FiniteSemiring const& s) {
    std::vector<element_type> id(s.order());
    for (std::size_t a = 0; a < s.order(); ++a) {
      id[a] = static_cast<element_type>(a);
    }
    return {relabeled_bytes(s, id, id)};
  }

}  // namespace idemgen
