#include "perclab/rational.hpp"

#include <charconv>
#include <numeric>

#include "perclab/errors.hpp"

namespace perclab {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return {parse_int(text, text), 1};

  bool negative = !text.empty() && text.front() == '-';
  std::string_view int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.size() > 15 || (int_part.empty() && frac_part.empty())) {
    throw ValidationError("not a rational number: '" + std::string(text) + "'");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
  if (whole < 0 || frac < 0) throw ValidationError("not a rational number: '" + std::string(text) + "'");
  const std::int64_t num = whole * den + frac;
  return {negative ? -num : num, den};
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ValidationError("division by zero rational");
  return {a.num_ * b.den_, a.den_ * b.num_};
}
std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

}  // namespace perclab
