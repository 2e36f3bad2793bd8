#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

namespace xyv {

/// An angle k*pi/4 with k taken mod 8. This is the full set of preparation and
/// measurement angles used anywhere in the toolkit.
class Angle8 {
 public:
  constexpr Angle8() = default;
  constexpr explicit Angle8(int k) : k_(static_cast<std::uint8_t>(((k % 8) + 8) % 8)) {}

  static constexpr Angle8 pi() { return Angle8(4); }
  /// b * pi for a bit b.
  static constexpr Angle8 pi_times(int bit) { return Angle8(4 * (bit & 1)); }

  constexpr int k() const { return k_; }
  double radians() const { return k_ * std::numbers::pi / 4.0; }
  /// e^{i k pi/4}
  std::complex<double> phase() const { return std::polar(1.0, radians()); }

  constexpr Angle8 operator+(Angle8 o) const { return Angle8(k_ + o.k_); }
  constexpr Angle8 operator-(Angle8 o) const { return Angle8(k_ - o.k_); }
  constexpr Angle8 operator-() const { return Angle8(-k_); }
  Angle8& operator+=(Angle8 o) { *this = *this + o; return *this; }
  Angle8& operator-=(Angle8 o) { *this = *this - o; return *this; }
  /// (-1)^bit * this
  constexpr Angle8 signed_by(int bit) const { return (bit & 1) ? -*this : *this; }

  constexpr bool operator==(const Angle8&) const = default;
  constexpr auto operator<=>(const Angle8&) const = default;

 private:
  std::uint8_t k_ = 0;
};

}  // namespace xyv
