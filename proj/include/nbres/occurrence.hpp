#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace nbres {

// A commutative monoid: default construction yields the neutral element,
// operator+ is the associative/commutative combination.
template <typename M>
concept CommutativeMonoid = std::regular<M> && requires(M a, M b) {
  { a + b } -> std::convertible_to<M>;
};

// Occurrence counts of a label among training examples: positive and
// negative uses. This is the (N x N, +) instance the ranking layer works on.
struct Occurrence {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  friend Occurrence operator+(Occurrence a, Occurrence b) {
    Occurrence r{a.pos + b.pos, a.neg + b.neg};
    if (r.pos < a.pos || r.neg < a.neg)
      throw std::overflow_error("Occurrence count overflow");
    return r;
  }

  Occurrence& operator+=(Occurrence o) { return *this = *this + o; }

  bool zero() const { return pos == 0 && neg == 0; }

  friend auto operator<=>(Occurrence, Occurrence) = default;
};

static_assert(CommutativeMonoid<Occurrence>);

}  // namespace nbres
