#include "robsched/value.hpp"

#include <limits>
#include <stdexcept>

namespace robsched {

namespace {

BigInt parse_big_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bare sign is not an integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_big_int(text));
  BigInt num = parse_big_int(text.substr(0, slash));
  BigInt den = parse_big_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  if (den < 0) {  // the rational backend insists on positive denominators
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

Value::Value(long long units) : rat_(units) {
  if (units < 0) throw std::invalid_argument("Value must be non-negative");
}

Value::Value(long long num, long long den)
    : rat_(den == 0 ? throw std::invalid_argument("zero denominator")
                    : Rational(BigInt(den < 0 ? -num : num), BigInt(den < 0 ? -den : den))) {
  if (rat_ < 0) throw std::invalid_argument("Value must be non-negative");
}

Value::Value(Rational r) : rat_(std::move(r)) {
  if (rat_ < 0) throw std::invalid_argument("Value must be non-negative");
}

Value Value::forbidden() {
  Value v;
  v.forbidden_ = true;
  return v;
}

Value Value::parse(std::string_view text) {
  if (text == "inf") return forbidden();
  Rational r = parse_rational(text);
  if (r < 0) throw std::invalid_argument("Value must be non-negative: " + std::string(text));
  return Value(std::move(r));
}

const Rational& Value::rational() const {
  if (forbidden_) throw std::domain_error("Forbidden value has no rational payload");
  return rat_;
}

Value Value::operator+(const Value& other) const {
  if (forbidden_ || other.forbidden_) return forbidden();
  return Value(rat_ + other.rat_);
}

Value& Value::operator+=(const Value& other) {
  *this = *this + other;
  return *this;
}

Value Value::minus(const Value& other) const {
  if (forbidden_ || other.forbidden_)
    throw std::domain_error("cannot subtract with Forbidden operands");
  Rational r = rat_ - other.rat_;
  if (r < 0) throw std::domain_error("subtraction would produce a negative Value");
  return Value(std::move(r));
}

Value Value::scaled_by(const Rational& factor) const {
  if (factor < 0) throw std::invalid_argument("scale factor must be non-negative");
  if (forbidden_) return forbidden();
  return Value(rat_ * factor);
}

Value Value::divided_by(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("divisor must be positive");
  if (forbidden_) return forbidden();
  return Value(rat_ / factor);
}

std::strong_ordering Value::operator<=>(const Value& other) const {
  if (forbidden_ && other.forbidden_) return std::strong_ordering::equal;
  if (forbidden_) return std::strong_ordering::greater;
  if (other.forbidden_) return std::strong_ordering::less;
  if (rat_ < other.rat_) return std::strong_ordering::less;
  if (rat_ > other.rat_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Value::operator==(const Value& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::string Value::str() const {
  if (forbidden_) return "inf";
  return rational_str(rat_);
}

double Value::approx() const {
  if (forbidden_) return std::numeric_limits<double>::infinity();
  return rat_.convert_to<double>();
}

}  // namespace robsched
