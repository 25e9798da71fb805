#include "idemgen/lift.hpp"

#include <optional>

#include <fmt/format.h>

#include "idemgen/classify.hpp"
#include "idemgen/errors.hpp"

namespace idemgen {

  namespace {

    unsigned ceil_log2(unsigned n) {
      unsigned k = 0;
      while ((1u << k) < n) {
        ++k;
      }
      return k;
    }

    element_type negate(FiniteSemiring const& s, element_type a) {
      auto neg = additive_inverse(s, a);
      if (!neg) {
        throw InternalError(fmt::format(
            "lifting produced '{}', which has no additive inverse", s.label(a)));
      }
      return *neg;
    }

  }  // namespace

  std::size_t lift_iteration_cap(unsigned nilpotency_index) {
    return ceil_log2(nilpotency_index) + 2;
  }

  LiftTrace lift_nilidempotent(FiniteSemiring const& s, element_type g) {
    if (g >= s.order()) {
      throw DomainError(fmt::format("element index {} out of range", g));
    }
    auto const sq = s.mul(g, g);
    bool       nilidempotent = false;

    for (std::size_t zi = 0; zi < s.order(); ++zi) {
      auto const z   = static_cast<element_type>(zi);
      auto const idx = nilpotency_index(s, z);
      if (!idx || s.add(g, z) != sq) {
        continue;
      }
      nilidempotent = true;
      if (!additive_inverse(s, z) || !is_central(s, z)) {
        continue;
      }

      LiftTrace trace{g, z, {}, g, s.zero(), 0};
      auto const cap = lift_iteration_cap(*idx);
      element_type gk = g;
      element_type zk = z;
      while (zk != s.zero()) {
        if (trace.steps.size() == cap) {
          throw InternalError(fmt::format(
              "lifting '{}' with defect '{}' did not terminate within {} rounds",
              s.label(g), s.label(z), cap));
        }
        auto const neg_z  = negate(s, zk);
        auto const w      = s.add(zk, scalar_repeat(s, 2, s.mul(gk, neg_z)));
        auto const z2     = s.mul(zk, zk);
        auto const next_z = s.add(scalar_repeat(s, 4, s.mul(z2, zk)),
                                  scalar_repeat(s, 3, negate(s, z2)));
        gk = s.add(gk, w);
        zk = next_z;
        if (s.mul(gk, gk) != s.add(gk, zk)) {
          throw InternalError(fmt::format("lifting invariant g^2 = g + z fails at '{}'",
                                          s.label(gk)));
        }
        trace.correction = s.add(trace.correction, w);
        trace.steps.push_back({gk, zk, w});
      }
      trace.f          = gk;
      trace.iterations = trace.steps.size();

      if (!is_idempotent(s, trace.f) || s.add(g, trace.correction) != trace.f
          || !is_nilpotent(s, trace.correction)) {
        throw InternalError(fmt::format("lift of '{}' ended at '{}' with correction '{}', "
                                        "which breaks f^2 = f = g + n, n nilpotent",
                                        s.label(g), s.label(trace.f),
                                        s.label(trace.correction)));
      }
      return trace;
    }

    if (!nilidempotent) {
      throw DomainError(fmt::format("'{}' is not nilidempotent", s.label(g)));
    }
    throw PreconditionError(fmt::format(
        "no nilpotent defect of '{}' is both additively invertible and central",
        s.label(g)));
  }

  element_type invert_unipotent(FiniteSemiring const& s, element_type x) {
    if (x >= s.order()) {
      throw DomainError(fmt::format("element index {} out of range", x));
    }
    auto const idx = nilpotency_index(s, x);
    if (!idx) {
      throw DomainError(fmt::format("'{}' is not nilpotent", s.label(x)));
    }
    auto const neg = additive_inverse(s, x);
    if (!neg) {
      throw DomainError(fmt::format("'{}' is not additively invertible", s.label(x)));
    }
    auto const k = std::max(1u, ceil_log2(*idx));

    element_type y   = s.add(s.one(), *neg);
    element_type pow = s.mul(x, x);
    for (unsigned j = 1; j < k; ++j) {
      y   = s.mul(y, s.add(s.one(), pow));
      pow = s.mul(pow, pow);
    }
    auto const u = s.add(s.one(), x);
    if (s.mul(u, y) != s.one() || s.mul(y, u) != s.one()) {
      throw InternalError(fmt::format("'{}' is not an inverse of 1 + '{}'", s.label(y),
                                      s.label(x)));
    }
    return y;
  }

}  // namespace idemgen
