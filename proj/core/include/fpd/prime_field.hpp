#pragma once

#include <cstdint>
#include <ostream>

namespace fpd {

namespace detail {
constexpr bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

/// Element of the prime field Z/PZ. Values are kept reduced in [0, P).
template <std::uint32_t P>
class PrimeField {
  static_assert(detail::is_prime(P), "PrimeField requires a prime modulus");

 public:
  static constexpr std::uint32_t order = P;

  constexpr PrimeField() = default;
  constexpr PrimeField(long long v)  // NOLINT: implicit like an integer literal
      : value_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) +
                                           static_cast<long long>(P)) %
                                          static_cast<long long>(P))) {}

  constexpr std::uint32_t value() const { return value_; }

  constexpr PrimeField operator+(PrimeField o) const {
    return from_reduced((value_ + o.value_) % P);
  }
  constexpr PrimeField operator-(PrimeField o) const {
    return from_reduced((value_ + P - o.value_) % P);
  }
  constexpr PrimeField operator-() const { return from_reduced((P - value_) % P); }
  constexpr PrimeField operator*(PrimeField o) const {
    return from_reduced(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(value_) * o.value_) % P));
  }
  constexpr PrimeField operator/(PrimeField o) const { return *this * o.inverse(); }

  constexpr PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  constexpr PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
  constexpr PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
  constexpr PrimeField& operator/=(PrimeField o) { return *this = *this / o; }

  // Fermat: a^(P-2). Undefined for zero; callers only divide by pivots.
  constexpr PrimeField inverse() const {
    PrimeField result(1);
    PrimeField base = *this;
    for (std::uint32_t e = P - 2; e > 0; e >>= 1) {
      if (e & 1u) result *= base;
      base *= base;
    }
    return result;
  }

  friend constexpr bool operator==(PrimeField a, PrimeField b) = default;

  friend std::ostream& operator<<(std::ostream& os, PrimeField a) {
    return os << a.value_;
  }

 private:
  static constexpr PrimeField from_reduced(std::uint32_t v) {
    PrimeField r;
    r.value_ = v;
    return r;
  }

  std::uint32_t value_ = 0;
};

using F2 = PrimeField<2>;
using F3 = PrimeField<3>;

}  // namespace fpd
