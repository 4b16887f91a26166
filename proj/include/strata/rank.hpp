#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace strata {

/// A natural number or infinity. Infinity compares above every finite
/// value and absorbs the successor operation.
class Rank {
 public:
  constexpr Rank() noexcept = default;
  constexpr explicit Rank(std::uint32_t value) noexcept : value_(value) {}

  static constexpr Rank infinity() noexcept { return Rank(kInfinity); }

  constexpr bool is_finite() const noexcept { return value_ != kInfinity; }

  // Only meaningful for finite ranks.
  constexpr std::uint32_t value() const noexcept { return value_; }

  // 1 + r, with 1 + inf = inf.
  constexpr Rank successor() const noexcept {
    return is_finite() ? Rank(value_ + 1) : *this;
  }

  friend constexpr auto operator<=>(Rank, Rank) noexcept = default;

  std::string to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("inf");
  }

 private:
  static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Rank r) { return os << r.to_string(); }

}  // namespace strata
