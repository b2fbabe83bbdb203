#pragma once

#include <Eigen/Core>

#include "nok/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<nok::Int> : GenericNumTraits<nok::Int> {
  typedef nok::Int Real;
  typedef nok::Int NonInteger;
  typedef nok::Int Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 30,
  };
};

template <>
struct NumTraits<nok::Rational> : GenericNumTraits<nok::Rational> {
  typedef nok::Rational Real;
  typedef nok::Rational NonInteger;
  typedef nok::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 40,
  };
};

}  // namespace Eigen

namespace nok {

/// Dense exact-scalar types. Everything in the core is a matrix or vector
/// over one of these scalars; Eigen supplies the container and expression
/// machinery, the scalars supply exactness.
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMat = Mat<Rational>;
using RVec = Vec<Rational>;
using IMat = Mat<Int>;
using IVec = Vec<Int>;

// Exact comparisons as free functions. Eigen's own operator== drags scalar
// conversion probing into boost's constructor templates on this toolchain,
// so matrix equality is spelled out.
template <typename D1, typename D2>
bool exact_eq(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename D>
bool is_zero(const Eigen::MatrixBase<D>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == typename D::Scalar(0))) return false;
  return true;
}

template <typename D>
bool is_symmetric(const Eigen::MatrixBase<D>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

inline RMat to_rational(const IMat& m) { return m.cast<Rational>(); }
inline RVec to_rational(const IVec& v) { return v.cast<Rational>(); }

}  // namespace nok
