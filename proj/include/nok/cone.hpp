#pragma once

#include <vector>

#include "nok/error.hpp"
#include "nok/linalg.hpp"
#include "nok/matrix.hpp"

namespace nok {

namespace detail {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational objective;
  RVec primal;  // original variables, when Optimal
  RVec farkas;  // when Infeasible: y with yᵀA ≤ 0 per column and yᵀb > 0
};

/// Two-phase dense tableau simplex for min cᵀz s.t. Az = b, z ≥ 0, over
/// exact rationals. Bland's rule (lowest index enters, lowest basis index
/// leaves on ratio ties) makes the pivot sequence deterministic and
/// cycle-free. Sized for the cone queries of this library (dimension ≤ ~8,
/// a few dozen generators); not a general LP facility.
class Simplex {
 public:
  Simplex(RMat a, RVec b, RVec c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.rows() != b_.size() || a_.cols() != c_.size())
      throw ContractError("Simplex: inconsistent dimensions");
  }

  LPResult run() {
    const Eigen::Index m = a_.rows(), n = a_.cols();
    std::vector<int> flips(static_cast<size_t>(m), 1);
    for (Eigen::Index i = 0; i < m; ++i)
      if (b_(i).sign() < 0) {
        a_.row(i) = -a_.row(i);
        b_(i) = -b_(i);
        flips[static_cast<size_t>(i)] = -1;
      }

    // phase-1 tableau: n original columns, m artificial columns, rhs
    tab_ = RMat::Zero(m, n + m + 1);
    tab_.block(0, 0, m, n) = a_;
    for (Eigen::Index i = 0; i < m; ++i) {
      tab_(i, n + i) = Rational(1);
      tab_(i, n + m) = b_(i);
    }
    basis_.resize(static_cast<size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) basis_[static_cast<size_t>(i)] = n + i;

    // cost row for min Σ artificials, reduced against the artificial basis
    cost_ = RVec::Zero(n + m + 1);
    for (Eigen::Index i = 0; i < m; ++i) cost_(n + i) = Rational(1);
    for (Eigen::Index i = 0; i < m; ++i) cost_ -= tab_.row(i).transpose();
    pivot_until_optimal();

    Rational infeasibility;
    for (Eigen::Index i = 0; i < tab_.rows(); ++i)
      if (basis_[static_cast<size_t>(i)] >= n) infeasibility += tab_(i, n + m);

    if (!infeasibility.is_zero()) {
      LPResult res;
      res.status = LPStatus::Infeasible;
      res.objective = infeasibility;
      // simplex multipliers of the phase-1 optimum: pi_i = 1 - r(artificial i)
      RVec y(m);
      for (Eigen::Index i = 0; i < m; ++i)
        y(i) = (Rational(1) - cost_(n + i)) * Rational(flips[static_cast<size_t>(i)]);
      res.farkas = std::move(y);
      return res;
    }

    drop_artificials(n);

    // phase 2: original columns plus rhs, original objective
    RMat reduced(tab_.rows(), n + 1);
    reduced.leftCols(n) = tab_.leftCols(n);
    reduced.col(n) = tab_.col(n + m);
    tab_ = std::move(reduced);
    cost_ = RVec::Zero(n + 1);
    cost_.head(n) = c_;
    for (Eigen::Index i = 0; i < tab_.rows(); ++i) {
      const Rational cb = c_(basis_[static_cast<size_t>(i)]);
      if (!cb.is_zero()) cost_ -= tab_.row(i).transpose() * cb;
    }
    if (!pivot_until_optimal()) {
      LPResult res;
      res.status = LPStatus::Unbounded;
      return res;
    }

    LPResult res;
    res.status = LPStatus::Optimal;
    res.primal = RVec::Zero(n);
    for (Eigen::Index i = 0; i < tab_.rows(); ++i)
      res.primal(basis_[static_cast<size_t>(i)]) = tab_(i, tab_.cols() - 1);
    for (Eigen::Index j = 0; j < n; ++j)
      if (!c_(j).is_zero()) res.objective += c_(j) * res.primal(j);
    return res;
  }

 private:
  bool pivot_until_optimal() {
    const Eigen::Index rhs = tab_.cols() - 1;
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < rhs; ++j)
        if (cost_(j).sign() < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < tab_.rows(); ++i) {
        if (tab_(i, enter).sign() <= 0) continue;
        const Rational ratio = tab_(i, rhs) / tab_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded descent
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Rational p = tab_(row, col);
    tab_.row(row) /= p;
    for (Eigen::Index i = 0; i < tab_.rows(); ++i) {
      if (i == row) continue;
      const Rational f = tab_(i, col);
      if (!f.is_zero()) tab_.row(i) -= tab_.row(row) * f;
    }
    const Rational fc = cost_(col);
    if (!fc.is_zero()) cost_ -= tab_.row(row).transpose() * fc;
    basis_[static_cast<size_t>(row)] = col;
  }

  // Pivot zero-level basic artificials onto original columns; a row with no
  // original column left is a redundant constraint and is removed, so phase 2
  // never touches an artificial again.
  void drop_artificials(Eigen::Index n) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < tab_.rows(); ++i) {
      if (basis_[static_cast<size_t>(i)] < n) {
        keep.push_back(i);
        continue;
      }
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n; ++j)
        if (!tab_(i, j).is_zero()) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(i, col);
        keep.push_back(i);
      }
    }
    if (static_cast<Eigen::Index>(keep.size()) != tab_.rows()) {
      RMat trimmed(static_cast<Eigen::Index>(keep.size()), tab_.cols());
      std::vector<Eigen::Index> new_basis;
      for (size_t i = 0; i < keep.size(); ++i) {
        trimmed.row(static_cast<Eigen::Index>(i)) = tab_.row(keep[i]);
        new_basis.push_back(basis_[static_cast<size_t>(keep[i])]);
      }
      tab_ = std::move(trimmed);
      basis_ = std::move(new_basis);
    }
  }

  RMat a_;
  RVec b_, c_;
  RMat tab_;
  RVec cost_;
  std::vector<Eigen::Index> basis_;
};

inline LPResult solve_lp(RMat a, RVec b, RVec c) {
  return Simplex(std::move(a), std::move(b), std::move(c)).run();
}

}  // namespace detail

/// Outcome of an exact cone-membership query, with a checkable certificate
/// either way: nonnegative coefficients reproducing the query vector, or a
/// functional that is ≥ 0 on every generator and < 0 on the query vector.
struct ConeQuery {
  bool member = false;
  RVec coefficients;  // per generator, when member
  RVec separator;     // when not member
};

inline ConeQuery cone_contains(const std::vector<RVec>& generators, const RVec& x) {
  if (generators.empty()) throw ContractError("cone_contains: empty generator list");
  const Eigen::Index dim = x.size();
  for (const RVec& g : generators)
    if (g.size() != dim) throw ContractError("cone_contains: dimension mismatch");

  RMat a(dim, static_cast<Eigen::Index>(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = generators[j];
  RVec c = RVec::Zero(a.cols());

  detail::LPResult lp = detail::solve_lp(a, x, c);
  ConeQuery q;
  if (lp.status == detail::LPStatus::Optimal) {
    q.member = true;
    q.coefficients = std::move(lp.primal);
    RVec recon = a * q.coefficients;
    if (!exact_eq(recon, x)) throw Error("cone_contains: certificate failed to reproduce input");
  } else {
    q.member = false;
    q.separator = -lp.farkas;
    for (const RVec& g : generators)
      if (q.separator.dot(g).sign() < 0) throw Error("cone_contains: invalid separating functional");
    if (q.separator.dot(x).sign() >= 0) throw Error("cone_contains: functional does not separate");
  }
  return q;
}

struct ConeMax {
  bool bounded = false;
  Rational value;  // sup { t : D - tC in cone }, when bounded
};

/// Exact parametric maximum along -C starting from a cone member D.
inline ConeMax cone_max_param(const std::vector<RVec>& generators, const RVec& d, const RVec& c) {
  if (d.size() != c.size()) throw ContractError("cone_max_param: dimension mismatch");
  if (!cone_contains(generators, d).member)
    throw ContractError("cone_max_param: D is not in the cone");

  const Eigen::Index dim = d.size();
  const Eigen::Index m = static_cast<Eigen::Index>(generators.size());
  RMat a(dim, m + 2);
  for (Eigen::Index j = 0; j < m; ++j) a.col(j) = generators[static_cast<size_t>(j)];
  a.col(m) = c;       // t+
  a.col(m + 1) = -c;  // t-
  RVec obj = RVec::Zero(m + 2);
  obj(m) = Rational(-1);
  obj(m + 1) = Rational(1);

  detail::LPResult lp = detail::solve_lp(a, d, obj);
  if (lp.status == detail::LPStatus::Unbounded) return {false, Rational(0)};
  if (lp.status != detail::LPStatus::Optimal)
    throw Error("cone_max_param: feasibility lost on a feasible instance");
  return {true, -lp.objective};
}

}  // namespace nok
