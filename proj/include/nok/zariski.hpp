#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "nok/surface.hpp"

namespace nok {

/// D = P + Σ aᵢ Cᵢ with P nef against the model's generators, every aᵢ > 0,
/// P ⊥ Cᵢ on the support, and the support Gram negative definite.
struct ZariskiDecomposition {
  RVec positive;
  std::vector<std::pair<std::string, Rational>> negative_coeffs;  // strictly positive entries
  RVec negative;

  Rational coefficient(const std::string& curve_label) const {
    for (const auto& [label, a] : negative_coeffs)
      if (label == curve_label) return a;
    return Rational(0);
  }
};

bool is_pseudo_effective(const SurfaceModel& model, const RVec& d);

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const RVec& d);

/// Coefficient of the named curve in the negative part of D.
Rational nu_of(const SurfaceModel& model, const RVec& d, const std::string& curve_label);

/// sup { t : D - tC pseudo-effective }; throws when the supremum is infinite.
Rational mu_of(const SurfaceModel& model, const RVec& d, const std::string& curve_label);

namespace detail {

template <typename Scalar>
Scalar pair_scalar(const IVec& gram_times_c, const Vec<Scalar>& x) {
  Scalar acc(0);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (gram_times_c(i) != 0) acc += x(i) * Scalar(Rational(gram_times_c(i)));
  return acc;
}

template <typename Scalar>
struct FujitaCore {
  Vec<Scalar> positive;
  std::vector<int> support;    // positions into the `negatives` argument
  std::vector<Scalar> coeffs;  // parallel to support, all >= 0
};

/// Fujita enlargement: start from the curves the divisor meets negatively,
/// solve the orthogonality system on that support, and keep absorbing any
/// curve the candidate positive part still meets negatively. Scalar-generic
/// so the same iteration runs over rationals and over t₀+ε jets.
template <typename Scalar>
FujitaCore<Scalar> fujita_iterate(const IMat& ns_gram,
                                  const std::vector<const CurveRecord*>& negatives,
                                  const Vec<Scalar>& d) {
  const int n = static_cast<int>(negatives.size());

  std::vector<Vec<Scalar>> classes(static_cast<size_t>(n));
  std::vector<IVec> paired(static_cast<size_t>(n));  // G * C_j
  IMat pairings(n, n);
  for (int j = 0; j < n; ++j) {
    const IVec& cls = negatives[static_cast<size_t>(j)]->cls;
    paired[static_cast<size_t>(j)] = ns_gram * cls;
    Vec<Scalar> v(cls.size());
    for (Eigen::Index i = 0; i < cls.size(); ++i) v(i) = Scalar(Rational(cls(i)));
    classes[static_cast<size_t>(j)] = std::move(v);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int acc(0);
      const IVec& ci = negatives[static_cast<size_t>(i)]->cls;
      for (Eigen::Index t = 0; t < ci.size(); ++t) acc += ci(t) * paired[static_cast<size_t>(j)](t);
      pairings(i, j) = acc;
    }

  std::vector<int> support;
  std::vector<Scalar> coeffs;
  Vec<Scalar> p = d;

  for (int round = 0; round <= n; ++round) {
    if (!support.empty()) {
      const int k = static_cast<int>(support.size());
      IMat restricted(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          restricted(i, j) = pairings(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)]);
      if (!is_negative_definite(restricted)) {
        std::string names;
        for (int i : support)
          names += (names.empty() ? "" : ", ") + negatives[static_cast<size_t>(i)]->label;
        throw DomainError("zariski: support {" + names + "} has non-negative-definite Gram");
      }
      Mat<Scalar> g(k, k);
      Vec<Scalar> rhs(k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) g(i, j) = Scalar(Rational(restricted(i, j)));
        rhs(i) = pair_scalar(paired[static_cast<size_t>(support[static_cast<size_t>(i)])], d);
      }
      LinearSolution<Scalar> sol = solve_linear<Scalar>(g, rhs);
      if (sol.status != SolveStatus::Unique)
        throw Error("zariski: singular system on a negative-definite support");
      coeffs.assign(sol.x.data(), sol.x.data() + k);
      p = d;
      for (int i = 0; i < k; ++i)
        p -= classes[static_cast<size_t>(support[static_cast<size_t>(i)])] * coeffs[static_cast<size_t>(i)];
    }

    std::vector<int> grown = support;
    for (int j = 0; j < n; ++j) {
      if (std::find(support.begin(), support.end(), j) != support.end()) continue;
      if (pair_scalar(paired[static_cast<size_t>(j)], p).sign() < 0) grown.push_back(j);
    }
    if (grown.size() == support.size()) break;
    std::sort(grown.begin(), grown.end());
    support = std::move(grown);
    if (round == n) throw Error("zariski: iteration failed to stabilize");
  }

  for (const Scalar& a : coeffs)
    if (a.sign() < 0) throw DomainError("zariski: negative coefficient in the negative part");

  return {std::move(p), std::move(support), std::move(coeffs)};
}

}  // namespace detail

}  // namespace nok
