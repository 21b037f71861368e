#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace simplexpaths {

/// Extended natural number: a finite count or infinity.
///
/// Total order: every finite value is smaller than infinity, and
/// infinity equals infinity.
class ExtNat {
  public:
    constexpr ExtNat() : raw_(0) {}

    static constexpr ExtNat finite(std::uint64_t v) { return ExtNat(v); }
    static constexpr ExtNat infinity() { return ExtNat(kInf); }

    [[nodiscard]] constexpr bool is_infinite() const { return raw_ == kInf; }
    [[nodiscard]] constexpr bool is_finite() const { return raw_ != kInf; }

    /// Finite value; must not be called on infinity.
    [[nodiscard]] constexpr std::uint64_t value() const { return raw_; }

    friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.raw_ == b.raw_; }
    friend constexpr bool operator!=(ExtNat a, ExtNat b) { return a.raw_ != b.raw_; }
    friend constexpr bool operator<(ExtNat a, ExtNat b) { return a.raw_ < b.raw_; }
    friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a.raw_ <= b.raw_; }
    friend constexpr bool operator>(ExtNat a, ExtNat b) { return a.raw_ > b.raw_; }
    friend constexpr bool operator>=(ExtNat a, ExtNat b) { return a.raw_ >= b.raw_; }

    [[nodiscard]] std::string to_string() const {
        return is_infinite() ? "inf" : std::to_string(raw_);
    }

  private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    explicit constexpr ExtNat(std::uint64_t raw) : raw_(raw) {}
    std::uint64_t raw_;
};

}  // namespace simplexpaths
