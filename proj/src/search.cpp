#include "nok/search.hpp"

#include "nok/configmv.hpp"

namespace nok {

namespace {

bool ample_in_model(const SurfaceModel& model, const RVec& d) {
  if (model.pair(d, d).sign() <= 0) return false;
  for (const GeneratorRecord& g : model.generators)
    if (model.pair(d, to_rational(g.cls)).sign() <= 0) return false;
  return true;
}

}  // namespace

SearchResult search_vertices(const SurfaceModel& model, int target, int coeff_min, int coeff_max) {
  if (coeff_min > coeff_max) throw ContractError("search_vertices: empty coefficient range");
  {
    std::vector<CurveRecord> negatives;
    for (int i : model.negative_curve_indices())
      negatives.push_back(model.curves[static_cast<size_t>(i)]);
    const MvReport mv = mv_surface(model.rho, negatives, model.ns_gram);
    if (target < 3 || target > mv.mv_value)
      throw ContractError("search_vertices: target " + std::to_string(target) +
                          " outside [3, mv = " + std::to_string(mv.mv_value) + "]");
  }

  SearchResult result;

  // point assignments per flag: GENERAL, then one curve at a time
  auto point_options = [&](const CurveRecord& flag_curve) {
    std::vector<std::map<std::string, int>> options;
    options.push_back({});
    for (const CurveRecord& other : model.curves) {
      if (other.label == flag_curve.label) continue;
      const Int cap = model.pair(other.cls, flag_curve.cls);
      for (Int m(1); m <= cap; ++m)
        options.push_back({{other.label, static_cast<int>(m.to_ll())}});
    }
    return options;
  };

  std::vector<int> coords(static_cast<size_t>(model.rho), coeff_min);
  for (;;) {
    RVec d(model.rho);
    for (int i = 0; i < model.rho; ++i) d(i) = Rational(coords[static_cast<size_t>(i)]);

    if (ample_in_model(model, d)) {
      for (const CurveRecord& c : model.curves) {
        for (const auto& pts : point_options(c)) {
          FlagSpec flag{c.label, pts};
          ++result.examined;
          try {
            NOBPolygon poly = polygon(model, d, flag);
            if (count_vertices(poly) == target) {
              result.found = true;
              result.divisor = std::move(d);
              result.flag = std::move(flag);
              result.poly = std::move(poly);
              return result;
            }
          } catch (const DomainError&) {
            // flag-in-negative-part, non-big direction, etc: not a hit
          }
        }
      }
    }

    // odometer over the divisor grid, last coordinate fastest
    int i = model.rho - 1;
    for (; i >= 0; --i) {
      if (coords[static_cast<size_t>(i)] < coeff_max) {
        ++coords[static_cast<size_t>(i)];
        for (int j = i + 1; j < model.rho; ++j) coords[static_cast<size_t>(j)] = coeff_min;
        break;
      }
    }
    if (i < 0) break;
  }
  return result;
}

}  // namespace nok
