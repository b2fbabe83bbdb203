#pragma once

#include "nok/error.hpp"
#include "nok/matrix.hpp"
#include "nok/rational.hpp"

namespace nok {

/// First-order expansion a + b·ε with ε an infinitesimal, ordered
/// lexicographically. Running the Zariski iteration over these scalars at
/// t = t₀ + ε decides support membership "just after t₀" exactly, which is
/// what the interval sweep needs at each breakpoint.
///
/// Products truncate at first order; that is exact in every use here
/// because matrix entries carry no ε part (it only ever enters through the
/// right-hand side of the linear systems).
struct Jet {
  Rational val;
  Rational eps;

  Jet() = default;
  Jet(Rational v) : val(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Jet(int v) : val(v) {}                  // NOLINT(google-explicit-constructor)
  Jet(Rational v, Rational e) : val(std::move(v)), eps(std::move(e)) {}

  bool is_zero() const { return val.is_zero() && eps.is_zero(); }
  int sign() const { return val.is_zero() ? eps.sign() : val.sign(); }

  friend Jet operator+(const Jet& a, const Jet& b) { return {a.val + b.val, a.eps + b.eps}; }
  friend Jet operator-(const Jet& a, const Jet& b) { return {a.val - b.val, a.eps - b.eps}; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return {a.val * b.val, a.val * b.eps + a.eps * b.val};
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.val.is_zero()) throw Error("Jet: division by an infinitesimal");
    return {a.val / b.val, (a.eps * b.val - a.val * b.eps) / (b.val * b.val)};
  }
  Jet operator-() const { return {-val, -eps}; }
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend bool operator==(const Jet& a, const Jet& b) { return a.val == b.val && a.eps == b.eps; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
  friend bool operator<(const Jet& a, const Jet& b) {
    return a.val != b.val ? a.val < b.val : a.eps < b.eps;
  }
  friend bool operator>(const Jet& a, const Jet& b) { return b < a; }
  friend bool operator<=(const Jet& a, const Jet& b) { return !(b < a); }
  friend bool operator>=(const Jet& a, const Jet& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    return os << j.val << (j.eps.is_zero() ? "" : "+" + j.eps.str() + "e");
  }
};

inline Jet abs(const Jet& j) { return j.sign() < 0 ? -j : j; }

using JVec = Vec<Jet>;
using JMat = Mat<Jet>;

}  // namespace nok

namespace Eigen {

template <>
struct NumTraits<nok::Jet> : GenericNumTraits<nok::Jet> {
  typedef nok::Jet Real;
  typedef nok::Jet NonInteger;
  typedef nok::Jet Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 120,
    MulCost = 80,
  };
};

}  // namespace Eigen
