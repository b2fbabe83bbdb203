#pragma once

#include "nok/nob.hpp"

namespace nok {

struct SearchResult {
  bool found = false;
  RVec divisor;
  FlagSpec flag;
  NOBPolygon poly;
  long examined = 0;  // (divisor, flag, point) triples evaluated
};

/// First (D, flag, point) in a deterministic grid whose polygon has exactly
/// `target` vertices. D ranges over integer coefficient vectors in
/// [coeff_min, coeff_max]^rho that pass the ampleness test (D² > 0 and
/// D·g > 0 for every generator); flags over the listed curves in order;
/// points over GENERAL followed by every single-curve local assignment.
SearchResult search_vertices(const SurfaceModel& model, int target, int coeff_min = -3,
                             int coeff_max = 6);

}  // namespace nok
