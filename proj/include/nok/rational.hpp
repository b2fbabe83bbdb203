#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace nok {

namespace detail {
using BigInt = boost::multiprecision::cpp_int;
}

/// Arbitrary-precision integer with plain value semantics.
///
/// A thin wrapper over boost's cpp_int whose constructor set is kept small
/// on purpose: conversions from Eigen expressions must fail without ever
/// instantiating boost's converting-constructor templates (their SFINAE
/// guards hard-error on Eigen types under this toolchain), so builtin
/// integers convert implicitly and everything else is explicit.
class Int {
 public:
  Int() : v_(0) {}

  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  Int(T n) : v_(n) {}  // NOLINT(google-explicit-constructor)

  explicit Int(detail::BigInt v) : v_(std::move(v)) {}
  explicit Int(const std::string& digits) : v_(digits) {}

  const detail::BigInt& raw() const { return v_; }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool even() const { return v_ % 2 == 0; }

  std::string str() const { return v_.str(); }
  long long to_ll() const { return v_.convert_to<long long>(); }
  double to_double() const { return v_.convert_to<double>(); }

  friend Int operator+(const Int& a, const Int& b) { return Int(detail::BigInt(a.v_ + b.v_)); }
  friend Int operator-(const Int& a, const Int& b) { return Int(detail::BigInt(a.v_ - b.v_)); }
  friend Int operator*(const Int& a, const Int& b) { return Int(detail::BigInt(a.v_ * b.v_)); }
  friend Int operator/(const Int& a, const Int& b) { return Int(detail::BigInt(a.v_ / b.v_)); }
  friend Int operator%(const Int& a, const Int& b) { return Int(detail::BigInt(a.v_ % b.v_)); }
  Int operator-() const { return Int(detail::BigInt(-v_)); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator++() { ++v_; return *this; }
  Int& operator--() { --v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.v_; }

 private:
  detail::BigInt v_;
};

inline Int abs(const Int& v) { return v.sign() < 0 ? -v : v; }
inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.raw(), b.raw()));
}

/// Exact fraction over Int, always in lowest terms with positive
/// denominator, so equality is plain member comparison. The constructor
/// discipline mirrors Int's.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(Int n) : num_(std::move(n)), den_(1) {}

  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  template <typename T, typename U,
            typename = std::enable_if_t<std::is_integral_v<T> && std::is_integral_v<U>>>
  Rational(T n, U d) : num_(n), den_(d) {
    normalize();
  }

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Int(1); }
  int sign() const { return num_.sign(); }

  /// Integer value; throws unless the denominator is 1.
  const Int& as_integer() const {
    if (!is_integer()) throw std::domain_error("Rational::as_integer: not an integer: " + str());
    return num_;
  }

  Int floor() const {
    Int q = num_ / den_;
    if (num_.sign() < 0 && !(num_ % den_).is_zero()) --q;
    return q;
  }
  Int ceil() const {
    Int q = num_ / den_;
    if (num_.sign() > 0 && !(num_ % den_).is_zero()) ++q;
    return q;
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// "p" or "p/q", minimal form.
  std::string str() const {
    std::string s = num_.str();
    if (!is_integer()) s += "/" + den_.str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// Parses "p" or "p/q" with optional sign; rejects anything else.
  static Rational parse(std::string_view text);

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > Int(1)) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    return Rational(to_int(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  return Rational(to_int(num), to_int(den));
}

}  // namespace nok
