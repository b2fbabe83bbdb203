#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nok/surface.hpp"
#include "nok/zariski.hpp"

namespace nok {

/// Admissible flag (C, p). The point enters only through the local
/// intersection multiplicities (Cᵢ·C)_p; an empty map is the GENERAL point
/// (all local multiplicities zero).
struct FlagSpec {
  std::string curve;
  std::map<std::string, int> point_multiplicities;

  bool general() const { return point_multiplicities.empty(); }
};

/// Continuous piecewise-linear function on [lo, hi]; pieces are maximal
/// (adjacent pieces with the same line are merged).
struct PiecewiseLinearFn {
  std::vector<Rational> breaks;                       // size = pieces + 1, strictly increasing
  std::vector<std::pair<Rational, Rational>> pieces;  // (slope, intercept) per interval

  const Rational& lo() const { return breaks.front(); }
  const Rational& hi() const { return breaks.back(); }
  Rational operator()(const Rational& t) const;
};

/// One maximal interval of the sweep on which the Zariski support of
/// D - tC is constant; coefficients and the positive part are affine in t.
struct SweepPiece {
  Rational t_lo, t_hi;
  std::vector<int> support;                                 // indices into model.curves
  std::vector<std::pair<Rational, Rational>> coeff_affine;  // (intercept, slope) per support entry
  RVec p_intercept, p_slope;                                // P(t) = p_intercept + t·p_slope
};

struct SweepResult {
  Rational nu, mu;
  int flag_curve = -1;  // index into model.curves
  std::vector<SweepPiece> pieces;
};

/// Partition [ν, μ] by support changes. Each boundary is the exact minimal
/// root of a coefficient or pairing hitting zero; each piece is re-validated
/// by an independent decomposition at its midpoint.
SweepResult sweep(const SurfaceModel& model, const RVec& d, const FlagSpec& flag);

/// α(t) = Σ aᵢ(t)·(Cᵢ·C)_p and β(t) = α(t) + P_t·C, assembled exactly.
std::pair<PiecewiseLinearFn, PiecewiseLinearFn> alpha_beta(const SurfaceModel& model,
                                                           const SweepResult& sw,
                                                           const FlagSpec& flag);

struct NOBPolygon {
  std::vector<std::pair<Rational, Rational>> vertices;  // counterclockwise, lex-least first
  PiecewiseLinearFn alpha, beta;
  Rational nu, mu;
  Rational area;
};

NOBPolygon polygon(const SurfaceModel& model, const RVec& d, const FlagSpec& flag);

int count_vertices(const NOBPolygon& poly);

}  // namespace nok
