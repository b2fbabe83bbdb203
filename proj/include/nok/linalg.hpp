#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "nok/error.hpp"
#include "nok/matrix.hpp"

namespace nok {

/// Inertia (n_plus, n_minus, n_zero) of a symmetric rational matrix,
/// computed by exact congruence diagonalization. Zero diagonal pivots are
/// repaired by the symmetric row+column trick, so degenerate matrices are
/// handled without special cases.
struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature_of(const RMat& gram) {
  if (!is_symmetric(gram)) throw ContractError("signature_of: matrix is not symmetric");
  RMat m = gram;
  const Eigen::Index n = m.rows();
  Signature sig;

  auto sym_swap = [&](Eigen::Index i, Eigen::Index j) {
    m.row(i).swap(m.row(j));
    m.col(i).swap(m.col(j));
  };
  // congruence row/col update: row_i += f*row_j, col_i += f*col_j
  auto sym_add = [&](Eigen::Index i, Eigen::Index j, const Rational& f) {
    m.row(i) += m.row(j) * f;
    m.col(i) += m.col(j) * f;
  };

  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index d = -1;
      for (Eigen::Index j = k + 1; j < n; ++j)
        if (!m(j, j).is_zero()) {
          d = j;
          break;
        }
      if (d >= 0) {
        sym_swap(k, d);
      } else {
        // all trailing diagonal entries are zero; look for an off-diagonal
        Eigen::Index oi = -1, oj = -1;
        for (Eigen::Index i = k; i < n && oi < 0; ++i)
          for (Eigen::Index j = i + 1; j < n; ++j)
            if (!m(i, j).is_zero()) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          sig.n_zero += static_cast<int>(n - k);
          return sig;
        }
        sym_add(oi, oj, Rational(1));  // makes m(oi,oi) = 2*m(oi,oj) != 0
        if (oi != k) sym_swap(k, oi);
      }
    }
    const Rational pivot = m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (!m(i, k).is_zero()) sym_add(i, k, -(m(i, k) / pivot));
    }
    if (pivot.sign() > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
  }
  return sig;
}

inline Signature signature_of(const IMat& gram) { return signature_of(to_rational(gram)); }

inline bool is_negative_definite(const RMat& gram) {
  const Signature s = signature_of(gram);
  return s.n_plus == 0 && s.n_zero == 0;
}

inline bool is_negative_definite(const IMat& gram) {
  return is_negative_definite(to_rational(gram));
}

inline bool is_positive_definite(const RMat& gram) {
  const Signature s = signature_of(gram);
  return s.n_minus == 0 && s.n_zero == 0;
}

/// Exact determinant of an integer matrix (fraction-free Bareiss
/// elimination; every intermediate division is exact over the integers).
inline Int determinant(const IMat& a) {
  if (a.rows() != a.cols()) throw ContractError("determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Int(1);
  IMat m = a;
  Int prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

enum class SolveStatus { Unique, NoSolution, Underdetermined };

template <typename Scalar>
struct LinearSolution {
  SolveStatus status = SolveStatus::NoSolution;
  Vec<Scalar> x;  // valid when status == Unique
};

/// Exact solve of A x = b by Gaussian elimination with first-nonzero
/// pivoting. Inconsistent and rank-deficient systems are reported as
/// distinct outcomes, never by throwing. Works over any exact field scalar
/// (Rational, or the first-order jets used by the parametric sweep).
template <typename Scalar>
LinearSolution<Scalar> solve_linear(Mat<Scalar> a, Vec<Scalar> b) {
  if (a.rows() != b.size()) throw ContractError("solve_linear: row count does not match rhs");
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col_of_row;

  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!(a(i, c) == Scalar(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      std::swap(b(p), b(r));
    }
    const Scalar pivot = a(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (!(a(i, c) == Scalar(0))) {
        const Scalar f = a(i, c) / pivot;
        a.row(i) -= a.row(r) * f;
        b(i) = b(i) - b(r) * f;
        a(i, c) = Scalar(0);
      }
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }

  for (Eigen::Index i = r; i < rows; ++i)
    if (!(b(i) == Scalar(0))) return {SolveStatus::NoSolution, {}};
  if (static_cast<Eigen::Index>(pivot_col_of_row.size()) < cols)
    return {SolveStatus::Underdetermined, {}};

  Vec<Scalar> x = Vec<Scalar>::Zero(cols);
  for (Eigen::Index i = r - 1; i >= 0; --i) {
    const Eigen::Index c = pivot_col_of_row[static_cast<size_t>(i)];
    Scalar acc = b(i);
    for (Eigen::Index j = c + 1; j < cols; ++j) acc = acc - a(i, j) * x(j);
    x(c) = acc / a(i, c);
  }
  return {SolveStatus::Unique, std::move(x)};
}

}  // namespace nok
