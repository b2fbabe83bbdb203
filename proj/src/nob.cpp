#include "nok/nob.hpp"

#include <algorithm>

#include "nok/jet.hpp"

namespace nok {

namespace {

int validate_flag(const SurfaceModel& model, const FlagSpec& flag) {
  const int fc = model.curve_index(flag.curve);
  if (fc < 0) throw ContractError("flag curve '" + flag.curve + "' is not a listed curve");
  const CurveRecord& c = model.curves[static_cast<size_t>(fc)];
  for (const auto& [label, mult] : flag.point_multiplicities) {
    if (label == flag.curve)
      throw DomainError("flag point data references the flag curve itself");
    const int ci = model.curve_index(label);
    if (ci < 0) throw ContractError("flag point references unknown curve '" + label + "'");
    const Int cap = model.pair(model.curves[static_cast<size_t>(ci)].cls, c.cls);
    if (mult < 0 || Int(mult) > cap)
      throw ContractError("local multiplicity of '" + label + "' must lie in [0, " + cap.str() +
                          "]");
  }
  return fc;
}

}  // namespace

Rational PiecewiseLinearFn::operator()(const Rational& t) const {
  if (breaks.empty() || t < lo() || t > hi())
    throw ContractError("PiecewiseLinearFn: argument outside the domain");
  size_t i = 0;
  while (i + 1 < pieces.size() && t > breaks[i + 1]) ++i;
  return pieces[i].first * t + pieces[i].second;
}

SweepResult sweep(const SurfaceModel& model, const RVec& d, const FlagSpec& flag) {
  if (d.size() != model.rho) throw ContractError("sweep: dimension mismatch");
  const int fc = validate_flag(model, flag);
  const RVec c = to_rational(model.curves[static_cast<size_t>(fc)].cls);

  if (!is_pseudo_effective(model, d))
    throw DomainError("sweep: divisor is not pseudo-effective");

  SweepResult out;
  out.flag_curve = fc;
  out.nu = zariski_decompose(model, d).coefficient(flag.curve);
  out.mu = mu_of(model, d, flag.curve);

  {
    ZariskiDecomposition at_nu = zariski_decompose(model, d - c * out.nu);
    if (model.pair(at_nu.positive, at_nu.positive).sign() <= 0)
      throw DomainError("sweep: divisor is not big (positive part has nonpositive square)");
  }
  if (!(out.nu < out.mu)) throw Error("sweep: empty parameter interval for a big divisor");

  const std::vector<int> neg_idx = model.negative_curve_indices();
  std::vector<const CurveRecord*> negatives;
  for (int i : neg_idx) negatives.push_back(&model.curves[static_cast<size_t>(i)]);
  std::vector<IVec> paired;  // G * C_j per negative curve
  for (const CurveRecord* n : negatives) paired.push_back(IVec(model.ns_gram * n->cls));

  Rational t = out.nu;
  int guard = 0;
  while (t < out.mu) {
    if (++guard > 1000) throw Error("sweep: support changes did not stabilize");

    // decomposition of D - (t + eps)·C decides the support just after t
    JVec dj(model.rho);
    for (Eigen::Index i = 0; i < model.rho; ++i) dj(i) = Jet(d(i) - t * c(i), -c(i));
    detail::FujitaCore<Jet> core = detail::fujita_iterate<Jet>(model.ns_gram, negatives, dj);

    SweepPiece piece;
    piece.t_lo = t;
    for (size_t s = 0; s < core.support.size(); ++s) {
      const int neg_pos = core.support[s];
      const Jet& a = core.coeffs[s];
      if (neg_idx[static_cast<size_t>(neg_pos)] == fc && !a.is_zero())
        throw DomainError("sweep: flag curve '" + flag.curve +
                          "' enters the negative part for t > nu (flag-in-negative-part)");
      piece.support.push_back(neg_idx[static_cast<size_t>(neg_pos)]);
      piece.coeff_affine.emplace_back(a.val - t * a.eps, a.eps);  // (intercept, slope)
    }
    piece.p_intercept = RVec(model.rho);
    piece.p_slope = RVec(model.rho);
    for (Eigen::Index i = 0; i < model.rho; ++i) {
      piece.p_slope(i) = core.positive(i).eps;
      piece.p_intercept(i) = core.positive(i).val - t * core.positive(i).eps;
    }

    // next breakpoint: first coefficient or off-support pairing to hit zero
    Rational t_next = out.mu;
    for (const auto& [intercept, slope] : piece.coeff_affine) {
      if (slope.sign() < 0) {
        const Rational root = -intercept / slope;
        if (root > t && root < t_next) t_next = root;
      }
    }
    for (size_t j = 0; j < negatives.size(); ++j) {
      if (std::find(core.support.begin(), core.support.end(), static_cast<int>(j)) !=
          core.support.end())
        continue;
      const Jet f = detail::pair_scalar(paired[j], core.positive);
      if (f.val.sign() > 0 && f.eps.sign() < 0) {
        const Rational root = t + f.val / (-f.eps);
        if (root < t_next) t_next = root;
      }
    }
    if (!(t_next > t)) throw Error("sweep: breakpoint did not advance");
    piece.t_hi = t_next;

    // independent re-validation at the midpoint
    {
      const Rational tm = (t + t_next) / Rational(2);
      const ZariskiDecomposition mid = zariski_decompose(model, d - c * tm);
      RVec p_mid = piece.p_intercept + piece.p_slope * tm;
      if (!exact_eq(p_mid, mid.positive))
        throw Error("sweep: symbolic positive part disagrees with the midpoint decomposition");
      size_t positives = 0;
      for (size_t s = 0; s < piece.support.size(); ++s) {
        const Rational a_mid =
            piece.coeff_affine[s].first + piece.coeff_affine[s].second * tm;
        const std::string& label = model.curves[static_cast<size_t>(piece.support[s])].label;
        if (a_mid.sign() < 0) throw Error("sweep: negative coefficient inside a piece");
        if (!a_mid.is_zero()) {
          ++positives;
          if (mid.coefficient(label) != a_mid)
            throw Error("sweep: symbolic coefficient of '" + label +
                        "' disagrees with the midpoint decomposition");
        }
      }
      if (positives != mid.negative_coeffs.size())
        throw Error("sweep: midpoint support differs from the symbolic support");
    }

    out.pieces.push_back(std::move(piece));
    t = t_next;
  }
  return out;
}

namespace {

PiecewiseLinearFn assemble(const std::vector<std::tuple<Rational, Rational, Rational, Rational>>&
                               raw /* (t_lo, t_hi, slope, intercept) */) {
  PiecewiseLinearFn fn;
  for (const auto& [lo, hi, slope, intercept] : raw) {
    if (!fn.pieces.empty() && fn.pieces.back().first == slope &&
        fn.pieces.back().second == intercept) {
      fn.breaks.back() = hi;  // merge: same line continues
      continue;
    }
    if (fn.breaks.empty()) {
      fn.breaks.push_back(lo);
    } else {
      // continuity across the break
      const Rational left = fn.pieces.back().first * lo + fn.pieces.back().second;
      const Rational right = slope * lo + intercept;
      if (left != right) throw Error("piecewise assembly: discontinuity at t = " + lo.str());
    }
    fn.breaks.push_back(hi);
    fn.pieces.emplace_back(slope, intercept);
  }
  return fn;
}

}  // namespace

std::pair<PiecewiseLinearFn, PiecewiseLinearFn> alpha_beta(const SurfaceModel& model,
                                                           const SweepResult& sw,
                                                           const FlagSpec& flag) {
  const int fc = validate_flag(model, flag);
  if (fc != sw.flag_curve) throw ContractError("alpha_beta: flag does not match the sweep");
  const RVec c = to_rational(model.curves[static_cast<size_t>(fc)].cls);

  std::vector<Rational> mult(model.curves.size(), Rational(0));
  for (const auto& [label, m] : flag.point_multiplicities)
    mult[static_cast<size_t>(model.curve_index(label))] = Rational(m);

  std::vector<std::tuple<Rational, Rational, Rational, Rational>> alpha_raw, beta_raw;
  for (const SweepPiece& piece : sw.pieces) {
    Rational a_slope, a_int;
    for (size_t s = 0; s < piece.support.size(); ++s) {
      const Rational& m = mult[static_cast<size_t>(piece.support[s])];
      if (m.is_zero()) continue;
      a_int += piece.coeff_affine[s].first * m;
      a_slope += piece.coeff_affine[s].second * m;
    }
    const Rational pc_slope = model.pair(piece.p_slope, c);
    const Rational pc_int = model.pair(piece.p_intercept, c);
    alpha_raw.emplace_back(piece.t_lo, piece.t_hi, a_slope, a_int);
    beta_raw.emplace_back(piece.t_lo, piece.t_hi, a_slope + pc_slope, a_int + pc_int);
  }

  PiecewiseLinearFn alpha = assemble(alpha_raw);
  PiecewiseLinearFn beta = assemble(beta_raw);

  for (size_t i = 0; i + 1 < alpha.pieces.size(); ++i)
    if (!(alpha.pieces[i].first < alpha.pieces[i + 1].first))
      throw Error("alpha is not convex");
  for (size_t i = 0; i + 1 < beta.pieces.size(); ++i)
    if (!(beta.pieces[i].first > beta.pieces[i + 1].first))
      throw Error("beta is not concave");

  return {std::move(alpha), std::move(beta)};
}

namespace {

using Point = std::pair<Rational, Rational>;

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

}  // namespace

NOBPolygon polygon(const SurfaceModel& model, const RVec& d, const FlagSpec& flag) {
  const SweepResult sw = sweep(model, d, flag);
  auto [alpha, beta] = alpha_beta(model, sw, flag);

  std::vector<Point> cycle;
  for (const Rational& t : alpha.breaks) cycle.emplace_back(t, alpha(t));
  for (auto it = beta.breaks.rbegin(); it != beta.breaks.rend(); ++it)
    cycle.emplace_back(*it, beta(*it));

  // dedupe, then circular collinearity pruning
  auto dedupe = [&] {
    std::vector<Point> out;
    for (const Point& p : cycle)
      if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    cycle = std::move(out);
  };
  dedupe();
  bool changed = true;
  while (changed && cycle.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < cycle.size(); ++i) {
      const Point& prev = cycle[(i + cycle.size() - 1) % cycle.size()];
      const Point& next = cycle[(i + 1) % cycle.size()];
      if (cross(prev, cycle[i], next).is_zero()) {
        cycle.erase(cycle.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (cycle.size() < 3) throw Error("polygon: degenerate region");

  Rational twice_area;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Point& p = cycle[i];
    const Point& q = cycle[(i + 1) % cycle.size()];
    twice_area += p.first * q.second - q.first * p.second;
  }
  if (twice_area.sign() <= 0) throw Error("polygon: unexpected orientation");

  const size_t start = static_cast<size_t>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  std::rotate(cycle.begin(), cycle.begin() + static_cast<long>(start), cycle.end());

  NOBPolygon poly;
  poly.vertices = std::move(cycle);
  poly.alpha = std::move(alpha);
  poly.beta = std::move(beta);
  poly.nu = sw.nu;
  poly.mu = sw.mu;
  poly.area = twice_area / Rational(2);
  return poly;
}

int count_vertices(const NOBPolygon& poly) { return static_cast<int>(poly.vertices.size()); }

}  // namespace nok
