#include "metlat/ext_value.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace metlat {

namespace {

using boost::multiprecision::cpp_int;

[[noreturn]] void bad_token(std::string_view token, const std::string& why) {
  throw std::invalid_argument("bad value token '" + std::string(token) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

cpp_int parse_digits(std::string_view token, std::string_view digits) {
  if (!all_digits(digits)) bad_token(token, "expected digits");
  return cpp_int(std::string(digits));
}

cpp_int pow10(std::size_t k) {
  cpp_int r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

ExtValue::ExtValue(int v) : value_(v) {
  if (v < 0) throw std::invalid_argument("ExtValue must be nonnegative");
}

ExtValue::ExtValue(Rational q) : value_(std::move(q)) {
  if (value_ < 0) throw std::invalid_argument("ExtValue must be nonnegative");
}

ExtValue ExtValue::infinity() {
  ExtValue v;
  v.infinite_ = true;
  return v;
}

ExtValue ExtValue::ratio(long long num, long long den) {
  return ExtValue(Rational(num, den));
}

const Rational& ExtValue::value() const {
  if (infinite_) throw std::logic_error("value() called on the infinite ExtValue");
  return value_;
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return ExtValue::infinity();
  return ExtValue(a.value_ + b.value_);
}

ExtValue& ExtValue::operator+=(const ExtValue& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ != b.infinite_) return false;
  return a.infinite_ || a.value_ == b.value_;
}

bool operator<(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) {
  return os << to_string(v);
}

ExtValue scaled(const ExtValue& v, const Rational& factor) {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  if (v.is_infinite()) return v;
  return ExtValue(v.value() * factor);
}

const ExtValue& min(const ExtValue& a, const ExtValue& b) { return b < a ? b : a; }

const ExtValue& max(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }

ExtValue midpoint(const ExtValue& a, const ExtValue& b) {
  if (a.is_infinite() || b.is_infinite())
    throw std::invalid_argument("midpoint requires finite values");
  return ExtValue((a.value() + b.value()) / 2);
}

std::string to_string(const ExtValue& v) {
  if (v.is_infinite()) return "inf";
  const Rational& q = v.value();
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (body.empty()) bad_token(token, "empty");

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_digits(token, body.substr(0, slash));
    cpp_int den = parse_digits(token, body.substr(slash + 1));
    if (den == 0) bad_token(token, "zero denominator");
    result = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    cpp_int whole = parse_digits(token, body.substr(0, dot));
    std::string_view frac = body.substr(dot + 1);
    cpp_int frac_num = parse_digits(token, frac);
    cpp_int scale = pow10(frac.size());
    result = Rational(whole * scale + frac_num, scale);
  } else {
    result = Rational(parse_digits(token, body));
  }
  return negative ? -result : result;
}

ExtValue parse_ext_value(std::string_view token) {
  if (token == "inf") return ExtValue::infinity();
  Rational q = parse_rational(token);
  if (q < 0) bad_token(token, "weights must be nonnegative");
  return ExtValue(std::move(q));
}

}  // namespace metlat
