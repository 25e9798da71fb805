// The two infinite semirings handled symbolically: the natural numbers N and
// N<x,y> = {a + bx + cy} with x^2 = x, y^2 = y, xy = x, yx = y.
//
// Each model offers the usual operation surface plus exact predicates that a
// finite window cannot decide on its own; window() enumerates elements with
// all coefficients at most a bound for property tests.

#ifndef IDEMGEN_SYMBOLIC_HPP_
#define IDEMGEN_SYMBOLIC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idemgen {

  inline constexpr std::uint64_t default_window = 10;

  struct SymbolicNat {
    std::uint64_t value = 0;

    friend bool operator==(SymbolicNat, SymbolicNat) = default;
    friend auto operator<=>(SymbolicNat, SymbolicNat) = default;
  };

  struct SymbolicTriple {
    std::uint64_t a = 0;  // coefficient of 1
    std::uint64_t b = 0;  // coefficient of x
    std::uint64_t c = 0;  // coefficient of y

    friend bool operator==(SymbolicTriple const&, SymbolicTriple const&) = default;
    friend auto operator<=>(SymbolicTriple const&, SymbolicTriple const&) = default;
  };

  std::string to_string(SymbolicNat n);
  std::string to_string(SymbolicTriple const& t);

  class NatModel {
   public:
    using element = SymbolicNat;

    element zero() const {
      return {0};
    }
    element one() const {
      return {1};
    }
    element add(element p, element q) const {
      return {p.value + q.value};
    }
    element mul(element p, element q) const {
      return {p.value * q.value};
    }

    std::vector<element> window(std::uint64_t bound = default_window) const;

    // n^2 = n only for 0 and 1.
    bool                 is_idempotent(element p) const;
    std::vector<element> idempotents() const;
    // n^k > 0 for n > 0.
    bool is_nilpotent(element p) const;
    // n = 1 + 1 + ... + 1.
    std::vector<element> additive_certificate(element p) const;
  };

  class TripleModel {
   public:
    using element = SymbolicTriple;

    element zero() const {
      return {0, 0, 0};
    }
    element one() const {
      return {1, 0, 0};
    }
    element x() const {
      return {0, 1, 0};
    }
    element y() const {
      return {0, 0, 1};
    }
    element add(element const& p, element const& q) const {
      return {p.a + q.a, p.b + q.b, p.c + q.c};
    }
    // (a,b,c)(a',b',c') = (aa', ab' + a'b + bb' + bc', ac' + a'c + cb' + cc').
    element mul(element const& p, element const& q) const;

    std::vector<element> window(std::uint64_t bound = default_window) const;

    // Solving e^2 = e coefficientwise: a^2 = a forces a in {0, 1}; a = 1
    // forces b = c = 0; a = 0 forces b = c = 0 or b + c = 1.
    bool                 is_idempotent(element const& p) const;
    std::vector<element> idempotents() const;

    // For a = 0, (0,b,c)^2 = (0, b(b+c), c(b+c)), which vanishes only when
    // b = c = 0; for a > 0 the constant term a^k never vanishes.
    bool is_nilpotent(element const& p) const;

    bool is_central(element const& p, std::uint64_t bound = default_window) const;

    // (a,b,c) = a copies of 1, b copies of x and c copies of y.
    std::vector<element> additive_certificate(element const& p) const;

    // An f with p + f = target, if one exists.  Coefficients are nonnegative,
    // so f = target - p componentwise must be nonnegative.
    std::optional<element> additive_difference(element const& p, element const& target) const;
  };

}  // namespace idemgen

#endif  // IDEMGEN_SYMBOLIC_HPP_
