#include "nok/configmv.hpp"

#include <algorithm>

namespace nok {

int mc_of(const NegConfig& config) {
  const int k = config.k();
  if (k == 0) return 0;
  std::vector<int> parent(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (config.gram(i, j) > 0) parent[static_cast<size_t>(find(i))] = find(j);
  std::vector<int> size(static_cast<size_t>(k), 0);
  int best = 1;
  for (int i = 0; i < k; ++i) best = std::max(best, ++size[static_cast<size_t>(find(i))]);
  return best;
}

int mv_of_config(const NegConfig& config, int rho) {
  const int k = config.k();
  const int mc = mc_of(config);
  if (k > rho - 1)
    throw ContractError("mv_of_config: k = " + std::to_string(k) + " exceeds rho - 1 = " +
                        std::to_string(rho - 1));
  return k < rho - 1 ? k + mc + 4 : k + mc + 3;
}

namespace {

IMat restricted_gram(const std::vector<CurveRecord>& curves, const IMat& ns_gram,
                     const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  IMat g(k, k);
  for (int i = 0; i < k; ++i) {
    IVec paired = ns_gram * curves[static_cast<size_t>(subset[static_cast<size_t>(i)])].cls;
    for (int j = 0; j < k; ++j) {
      const IVec& cj = curves[static_cast<size_t>(subset[static_cast<size_t>(j)])].cls;
      Int acc(0);
      for (Eigen::Index t = 0; t < cj.size(); ++t) acc += cj(t) * paired(t);
      g(j, i) = acc;
    }
  }
  return g;
}

}  // namespace

MvReport mv_surface(int rho, const std::vector<CurveRecord>& curves, const IMat& ns_gram) {
  if (rho < 1) throw ContractError("mv_surface: rho must be at least 1");
  if (curves.size() > 20)
    throw DomainError("mv_surface: curve lists larger than 20 are not supported");
  for (const CurveRecord& c : curves) {
    if (!c.irreducible)
      throw DomainError("mv_surface: curve '" + c.label + "' is not asserted irreducible");
    if (c.self_intersection >= 0)
      throw DomainError("mv_surface: curve '" + c.label + "' has self-intersection " +
                        c.self_intersection.str() + " >= 0; only negative curves enter mv");
    IVec paired = ns_gram * c.cls;
    Int norm(0);
    for (Eigen::Index t = 0; t < c.cls.size(); ++t) norm += c.cls(t) * paired(t);
    if (norm != c.self_intersection)
      throw DomainError("mv_surface: curve '" + c.label +
                        "' self-intersection does not match its class");
  }

  const int n = static_cast<int>(curves.size());
  MvReport report;
  report.mv_value = -1;

  // depth-first over subsets in ascending-index (lexicographic) order;
  // negative-definiteness is hereditary, so a bad subset prunes its branch
  std::vector<int> subset;
  auto consider = [&](const std::vector<int>& idx, const IMat& g) {
    NegConfig cfg{idx, g};
    const int value = mv_of_config(cfg, rho);
    if (value > report.mv_value) {
      report.mv_value = value;
      report.witness = std::move(cfg);
    }
  };
  auto dfs = [&](auto&& self, int next) -> void {
    const IMat g = restricted_gram(curves, ns_gram, subset);
    if (!subset.empty() && !is_negative_definite(g)) return;
    if (static_cast<int>(subset.size()) <= rho - 1) consider(subset, g);
    if (static_cast<int>(subset.size()) >= rho - 1) return;  // rank bound: no larger ND subset
    for (int j = next; j < n; ++j) {
      subset.push_back(j);
      self(self, j + 1);
      subset.pop_back();
    }
  };
  dfs(dfs, 0);

  for (int i : report.witness.indices)
    report.witness_labels.push_back(curves[static_cast<size_t>(i)].label);

  // certification against proven upper bounds
  const int kuronya_bound = 2 * rho + 1;
  report.upper_bound_used = kuronya_bound;
  if (report.mv_value == kuronya_bound) {
    report.certified = true;
    report.note = "meets the 2*rho+1 bound";
    return report;
  }
  bool all_minus_two = true;
  for (const CurveRecord& c : curves)
    if (c.self_intersection != -2) all_minus_two = false;
  if (all_minus_two) {
    Lattice ns = make_lattice("NS", ns_gram,
                              [&] {
                                std::vector<std::string> ls;
                                for (int i = 0; i < static_cast<int>(ns_gram.rows()); ++i)
                                  ls.push_back("b" + std::to_string(i));
                                return ls;
                              }());
    const A2Bound a2 = mv_upper_bound_via_a2(ns, true);
    if (a2.obstruction_used) {
      report.upper_bound_used = std::min(kuronya_bound, a2.bound);
      if (report.mv_value == report.upper_bound_used) {
        report.certified = true;
        report.note = "meets the A2-obstruction bound rho+3 (assuming every negative curve on "
                      "the surface is a (-2)-curve)";
        return report;
      }
    }
  }
  report.note = "lower bound relative to the declared curve list";
  return report;
}

A2Bound mv_upper_bound_via_a2(const Lattice& ns, bool all_negatives_are_minus2) {
  if (!all_negatives_are_minus2)
    throw ContractError("mv_upper_bound_via_a2: the (-2)-curve assertion is required");
  const int rho = static_cast<int>(ns.rank());
  const int kuronya_bound = 2 * rho + 1;
  const RootEmbedding verdict = embeds_root(root_lattice(RootFamily::A, 2), ns);
  A2Bound out;
  switch (verdict.status) {
    case RootEmbedding::Status::No:
      // no two (-2)-curves can meet exactly once, so every negative-definite
      // configuration is disjoint: mc = 1 and mv(N) <= rho + 3
      out.bound = std::min(kuronya_bound, rho + 3);
      out.obstruction_used = true;
      out.note = "A2 does not embed (obstruction mod " +
                 std::to_string(verdict.obstruction_modulus) + ")";
      break;
    case RootEmbedding::Status::Yes:
      out.bound = kuronya_bound;
      out.note = "A2 embeds; generic bound";
      break;
    case RootEmbedding::Status::Unknown:
      out.bound = kuronya_bound;
      out.note = "bound not improved (embedding search inconclusive)";
      break;
  }
  return out;
}

std::string PicardConstraint::describe() const {
  switch (kind) {
    case Kind::ExactRho:
      return "rho = " + std::to_string(rho);
    case Kind::NoNegativesRhoAtLeastTwo:
      return "rho > 1 and the surface carries no negative irreducible curve";
    case Kind::NoConstraint:
      return "no constraint on rho";
  }
  return "";
}

PicardConstraint classify_picard(int mv, bool has_negative_curve) {
  if (mv < 3) throw ContractError("classify_picard: mv is at least 3 for every surface");
  PicardConstraint out;
  switch (mv) {
    case 3:
      if (has_negative_curve)
        throw DomainError("classify_picard: mv = 3 forces rho = 1, which admits no "
                          "negative-definite configuration of size >= 1");
      out.kind = PicardConstraint::Kind::ExactRho;
      out.rho = 1;
      break;
    case 4:
      if (has_negative_curve)
        throw DomainError("classify_picard: mv = 4 is incompatible with a negative curve "
                          "(a single negative curve already gives mv >= 5)");
      out.kind = PicardConstraint::Kind::NoNegativesRhoAtLeastTwo;
      break;
    case 5:
      if (has_negative_curve) {
        out.kind = PicardConstraint::Kind::ExactRho;
        out.rho = 2;
      } else {
        out.kind = PicardConstraint::Kind::NoConstraint;
      }
      break;
    default:
      out.kind = PicardConstraint::Kind::NoConstraint;
      break;
  }
  return out;
}

}  // namespace nok
