#pragma once

// Exact dyadic rationals. Every finite double is m * 2^e for integers m, e,
// and dyadics are closed under +, - and *, so the orientation and
// farther-than expressions can be evaluated without any rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace fpqh {

class Dyadic {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Dyadic() = default;

  /// Exact conversion; throws on NaN or infinity.
  explicit Dyadic(double v) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("Dyadic: non-finite value");
    }
    if (v == 0.0) return;
    int e = 0;
    const double f = std::frexp(v, &e);  // v = f * 2^e, 0.5 <= |f| < 1
    mantissa_ = static_cast<std::int64_t>(std::ldexp(f, 53));
    exponent_ = e - 53;
    normalize();
  }

  Dyadic(Integer mantissa, int exponent)
      : mantissa_(std::move(mantissa)), exponent_(exponent) {
    normalize();
  }

  [[nodiscard]] int sign() const { return mantissa_.sign(); }
  [[nodiscard]] bool is_zero() const { return mantissa_.is_zero(); }
  [[nodiscard]] const Integer& mantissa() const { return mantissa_; }
  [[nodiscard]] int exponent() const { return exponent_; }

  [[nodiscard]] Dyadic abs() const {
    return Dyadic(boost::multiprecision::abs(mantissa_), exponent_);
  }

  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.mantissa_, a.exponent_); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exponent_ < b.exponent_) {
      return Dyadic(a.mantissa_ + (b.mantissa_ << (b.exponent_ - a.exponent_)), a.exponent_);
    }
    return Dyadic((a.mantissa_ << (a.exponent_ - b.exponent_)) + b.mantissa_, b.exponent_);
  }

  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    // Normalized form (odd mantissa or zero) is unique.
    return a.mantissa_ == b.mantissa_ && (a.is_zero() || a.exponent_ == b.exponent_);
  }

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Correctly rounded (to nearest) conversion. Overflow gives infinity,
  /// values below the subnormal range flush toward zero.
  [[nodiscard]] double to_double() const {
    if (is_zero()) return 0.0;
    Integer mag = boost::multiprecision::abs(mantissa_);
    const auto bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
    long shift = 0;
    if (bits > 64) {
      shift = bits - 64;
      const bool sticky = boost::multiprecision::lsb(mag) < static_cast<unsigned long>(shift);
      mag >>= shift;
      if (sticky) mag |= 1;  // keeps round-to-nearest from double rounding
    }
    const auto top = static_cast<std::uint64_t>(mag);
    const double r = std::ldexp(static_cast<double>(top), static_cast<int>(shift + exponent_));
    return mantissa_.sign() < 0 ? -r : r;
  }

 private:
  void normalize() {
    if (mantissa_.is_zero()) {
      exponent_ = 0;
      return;
    }
    const auto tz = boost::multiprecision::lsb(boost::multiprecision::abs(mantissa_));
    if (tz > 0) {
      mantissa_ >>= tz;
      exponent_ += static_cast<int>(tz);
    }
  }

  Integer mantissa_ = 0;
  int exponent_ = 0;
};

}  // namespace fpqh
