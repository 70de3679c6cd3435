#ifndef LPA_COUNT_HPP_
#define LPA_COUNT_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "error.hpp"

namespace lpa {

  //! A natural number or the symbol omega (countably infinite).
  //!
  //! Arithmetic is omega-absorbing: omega + x = omega and k * omega = omega
  //! for k >= 1, while 0 * omega = 0. Finite overflow raises ResourceLimit.
  class Count {
   public:
    constexpr Count() noexcept = default;
    constexpr Count(std::uint64_t v) noexcept : value_(v) {}  // NOLINT

    static constexpr Count omega() noexcept {
      Count c;
      c.value_.reset();
      return c;
    }

    [[nodiscard]] constexpr bool is_omega() const noexcept {
      return !value_.has_value();
    }
    [[nodiscard]] constexpr bool is_finite() const noexcept {
      return value_.has_value();
    }
    // Precondition: is_finite().
    [[nodiscard]] constexpr std::uint64_t value() const { return *value_; }

    friend Count operator+(Count a, Count b) {
      if (a.is_omega() || b.is_omega()) {
        return omega();
      }
      std::uint64_t r;
      if (__builtin_add_overflow(*a.value_, *b.value_, &r)) {
        throw Error(Errc::ResourceLimit, "path count overflows 64 bits");
      }
      return Count(r);
    }

    friend Count operator*(Count a, Count b) {
      if (a == Count(0) || b == Count(0)) {
        return Count(0);
      }
      if (a.is_omega() || b.is_omega()) {
        return omega();
      }
      std::uint64_t r;
      if (__builtin_mul_overflow(*a.value_, *b.value_, &r)) {
        throw Error(Errc::ResourceLimit, "path count overflows 64 bits");
      }
      return Count(r);
    }

    Count& operator+=(Count o) { return *this = *this + o; }
    Count& operator*=(Count o) { return *this = *this * o; }

    friend constexpr bool operator==(Count a, Count b) noexcept {
      return a.value_ == b.value_;
    }

    // omega compares greater than every natural.
    friend constexpr std::strong_ordering operator<=>(Count a,
                                                      Count b) noexcept {
      if (a.is_omega() || b.is_omega()) {
        return a.is_omega() <=> b.is_omega();
      }
      return *a.value_ <=> *b.value_;
    }

    [[nodiscard]] std::string to_string() const {
      return is_omega() ? std::string("omega") : std::to_string(*value_);
    }

    friend std::ostream& operator<<(std::ostream& os, Count c) {
      return os << c.to_string();
    }

   private:
    std::optional<std::uint64_t> value_ = std::uint64_t{0};
  };

}  // namespace lpa

#endif  // LPA_COUNT_HPP_
