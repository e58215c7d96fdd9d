#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace metlat {

/// Exact rational scalar (arbitrary precision, always kept in lowest terms).
using Rational = boost::multiprecision::cpp_rational;

/// A value in [0, inf]: an exact nonnegative rational or the single point
/// at infinity. Addition is total with infinity absorbing; the order is
/// total with every finite value below infinity. All comparisons are exact.
class ExtValue {
public:
  ExtValue() = default;
  ExtValue(int v);
  ExtValue(Rational q);

  static ExtValue infinity();
  /// Convenience for literals in tests and tables: ratio(3, 2) == 3/2.
  static ExtValue ratio(long long num, long long den);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_.is_zero(); }

  /// Finite payload; calling this on the infinite value is a logic error.
  const Rational& value() const;

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  ExtValue& operator+=(const ExtValue& other);

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }
  friend bool operator<(const ExtValue& a, const ExtValue& b);
  friend bool operator>(const ExtValue& a, const ExtValue& b) { return b < a; }
  friend bool operator<=(const ExtValue& a, const ExtValue& b) { return !(b < a); }
  friend bool operator>=(const ExtValue& a, const ExtValue& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const ExtValue& v);

private:
  bool infinite_ = false;
  Rational value_ = 0;
};

/// Multiply a value by a positive finite factor; infinity is a fixed point.
ExtValue scaled(const ExtValue& v, const Rational& factor);

const ExtValue& min(const ExtValue& a, const ExtValue& b);
const ExtValue& max(const ExtValue& a, const ExtValue& b);

/// Exact midpoint of two finite values.
ExtValue midpoint(const ExtValue& a, const ExtValue& b);

/// Canonical text form: "inf", an integer, or "p/q" in lowest terms.
/// parse_ext_value(to_string(v)) == v for every value.
std::string to_string(const ExtValue& v);

/// Accepts "p/q", a decimal literal (exact: "1.2" == 6/5), or a plain
/// integer. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view token);

/// As parse_rational plus the token "inf"; rejects negative values.
ExtValue parse_ext_value(std::string_view token);

}  // namespace metlat

namespace Eigen {

template <>
struct NumTraits<metlat::ExtValue> : GenericNumTraits<metlat::ExtValue> {
  typedef metlat::ExtValue Real;
  typedef metlat::ExtValue NonInteger;
  typedef metlat::ExtValue Nested;
  typedef metlat::ExtValue Literal;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };

  static metlat::ExtValue epsilon() { return metlat::ExtValue(0); }
  static metlat::ExtValue dummy_precision() { return metlat::ExtValue(0); }
  static metlat::ExtValue highest() { return metlat::ExtValue::infinity(); }
  static metlat::ExtValue lowest() { return metlat::ExtValue(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
