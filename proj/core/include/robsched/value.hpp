#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace robsched {

/// Arbitrary-precision rational. All solver arithmetic is exact; threshold
/// comparisons and certificates must never depend on floating-point noise.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "num", "num/den" (den > 0 after normalization). Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "num" when the denominator is 1, "num/den" otherwise.
std::string rational_str(const Rational& r);

/// A non-negative exact rational with a distinguished Forbidden marker.
///
/// Forbidden models processing times of assignments that must never happen.
/// It absorbs addition and scaling and compares strictly greater than every
/// finite value, so "minimize the maximum" style code handles it naturally.
class Value {
public:
  Value() = default;  // zero
  Value(long long units);
  Value(long long num, long long den);
  explicit Value(Rational r);

  static Value forbidden();

  /// Parses "num", "num/den" or "inf". Throws std::invalid_argument on
  /// malformed or negative input.
  static Value parse(std::string_view text);

  bool is_forbidden() const { return forbidden_; }
  bool is_zero() const { return !forbidden_ && rat_.is_zero(); }

  /// Finite payload; throws std::domain_error when Forbidden.
  const Rational& rational() const;

  Value operator+(const Value& other) const;
  Value& operator+=(const Value& other);

  /// Finite subtraction; throws std::domain_error when either side is
  /// Forbidden or the result would be negative.
  Value minus(const Value& other) const;

  /// Multiplies by a non-negative rational factor. Forbidden is absorbing.
  Value scaled_by(const Rational& factor) const;

  /// Divides by a strictly positive rational factor. Forbidden is absorbing.
  Value divided_by(const Rational& factor) const;

  std::strong_ordering operator<=>(const Value& other) const;
  bool operator==(const Value& other) const;

  /// "inf" or the canonical rational form.
  std::string str() const;

  /// Lossy double view for reports; +infinity when Forbidden.
  double approx() const;

private:
  Rational rat_{};
  bool forbidden_ = false;
};

}  // namespace robsched
