#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace perclab {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd-reduced, positive denominator). Overflow is not checked; values in
/// this library stay tiny (cut sizes, degree bounds, user-given fractions).
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "3", "2/3", "0.25", "-1.5". Throws ValidationError on junk.
  static Rational parse(std::string_view text);

  /// "2/3", or "3" for integers.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace perclab
