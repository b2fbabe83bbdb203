#include "nok/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nok/error.hpp"

namespace nok {

namespace {

bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

std::string unique_label(const std::string& wanted, const std::set<std::string>& taken) {
  if (!taken.count(wanted)) return wanted;
  for (int k = 2;; ++k) {
    std::string candidate = wanted + "_" + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace

Int Lattice::pair(const IVec& x, const IVec& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw ContractError("Lattice::pair: vector dimension does not match rank");
  IVec gy = gram * y;
  Int acc(0);
  for (Eigen::Index i = 0; i < rank(); ++i) acc += x(i) * gy(i);
  return acc;
}

Lattice make_lattice(std::string name, IMat gram, std::vector<std::string> labels,
                     bool allow_degenerate) {
  if (!is_symmetric(gram)) throw ContractError("make_lattice: Gram matrix is not symmetric");
  if (static_cast<Eigen::Index>(labels.size()) != gram.rows())
    throw ContractError("make_lattice: label count does not match rank");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw ContractError("make_lattice: duplicate label '" + l + "'");
  if (!allow_degenerate && gram.rows() > 0 && determinant(gram) == 0)
    throw ContractError("make_lattice: degenerate Gram matrix for '" + name + "'");
  return Lattice{std::move(name), std::move(gram), std::move(labels)};
}

Lattice root_lattice(RootFamily family, int n) {
  std::vector<std::pair<int, int>> edges;
  std::string name;
  switch (family) {
    case RootFamily::A:
      if (n < 1) throw ContractError("root_lattice: A_n needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      name = "A" + std::to_string(n);
      break;
    case RootFamily::D:
      if (n < 4) throw ContractError("root_lattice: D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      name = "D" + std::to_string(n);
      break;
    case RootFamily::E:
      if (n < 6 || n > 8) throw ContractError("root_lattice: E_n needs n in {6,7,8}");
      // chain 0-2-3-4-...-(n-1), extra node 1 attached to 3
      edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, 3);
      name = "E" + std::to_string(n);
      break;
  }
  IMat gram = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) gram(i, i) = Int(-2);
  for (auto [i, j] : edges) {
    gram(i, j) = Int(1);
    gram(j, i) = Int(1);
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("r" + std::to_string(i));
  return Lattice{std::move(name), std::move(gram), std::move(labels)};
}

Lattice hyperbolic_u() {
  IMat gram(2, 2);
  gram << Int(0), Int(1), Int(1), Int(0);
  return Lattice{"U", std::move(gram), {"e", "f"}};
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const Eigen::Index n = a.rank(), m = b.rank();
  IMat gram = IMat::Zero(n + m, n + m);
  gram.block(0, 0, n, n) = a.gram;
  gram.block(n, n, m, m) = b.gram;
  std::vector<std::string> labels = a.labels;
  std::set<std::string> taken(labels.begin(), labels.end());
  for (const auto& l : b.labels) {
    std::string chosen = unique_label(l, taken);
    taken.insert(chosen);
    labels.push_back(std::move(chosen));
  }
  std::string name = a.name.empty() ? b.name : (b.name.empty() ? a.name : a.name + "+" + b.name);
  return Lattice{std::move(name), std::move(gram), std::move(labels)};
}

Int discriminant(const Lattice& l) { return determinant(l.gram); }

bool is_even(const Lattice& l) {
  for (Eigen::Index i = 0; i < l.rank(); ++i)
    if (l.gram(i, i) % 2 != 0) return false;
  return true;
}

Signature lattice_signature(const Lattice& l) { return signature_of(l.gram); }

std::vector<IVec> roots_of(const Lattice& l) {
  const Eigen::Index n = l.rank();
  if (!is_negative_definite(l.gram))
    throw ContractError("roots_of: lattice '" + l.name + "' is not negative definite");
  if (n == 0) return {};

  // Q = -G is positive definite; factor Q = Uᵀ D U exactly so that
  // Q(x) = Σ dᵢ (xᵢ + Σ_{j>i} U(i,j) xⱼ)², which bounds each coordinate.
  RMat q = to_rational(l.gram);
  q = -q;
  RMat u = RMat::Zero(n, n);
  RVec d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i) = q(i, i);
    u(i, i) = Rational(1);
    for (Eigen::Index j = i + 1; j < n; ++j) u(i, j) = q(i, j) / d(i);
    for (Eigen::Index k = i + 1; k < n; ++k)
      for (Eigen::Index j = i + 1; j < n; ++j) q(k, j) -= d(i) * u(i, k) * u(i, j);
  }

  std::vector<IVec> roots;
  IVec x = IVec::Zero(n);
  const Rational two(2);

  // depth-first from the last coordinate; budget = 2 - contribution of the tail
  auto enumerate = [&](auto&& self, Eigen::Index i, const Rational& budget) -> void {
    if (i < 0) {
      Int norm = l.norm(x);
      if (norm == -2) roots.push_back(x);
      return;
    }
    Rational shift;
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (x(j) != 0) shift += u(i, j) * Rational(x(j));
    auto contribution = [&](const Int& m) {
      Rational t = Rational(m) + shift;
      return d(i) * t * t;
    };
    Int m0 = (-shift).floor();
    for (Int m = m0;; --m) {
      Rational c = contribution(m);
      if (c > budget) break;
      x(i) = m;
      self(self, i - 1, budget - c);
    }
    for (Int m = m0 + 1;; ++m) {
      Rational c = contribution(m);
      if (c > budget) break;
      x(i) = m;
      self(self, i - 1, budget - c);
    }
    x(i) = Int(0);
  };
  enumerate(enumerate, n - 1, two);

  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

IMat integral_span_basis(const std::vector<IVec>& vectors) {
  if (vectors.empty()) return IMat(0, 0);
  const Eigen::Index n = vectors.front().size();
  IMat m(n, static_cast<Eigen::Index>(vectors.size()));
  for (size_t j = 0; j < vectors.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vectors[j];

  Eigen::Index lead = 0;
  for (Eigen::Index r = 0; r < n && lead < m.cols(); ++r) {
    // euclidean column reduction in row r
    for (;;) {
      Eigen::Index p = -1;
      for (Eigen::Index j = lead; j < m.cols(); ++j)
        if (m(r, j) != 0 && (p < 0 || abs(m(r, j)) < abs(m(r, p)))) p = j;
      if (p < 0) break;
      m.col(lead).swap(m.col(p));
      bool reduced = true;
      for (Eigen::Index j = lead + 1; j < m.cols(); ++j) {
        if (m(r, j) == 0) continue;
        Int f = m(r, j) / m(r, lead);
        m.col(j) -= m.col(lead) * f;
        if (m(r, j) != 0) reduced = false;
      }
      if (reduced) {
        if (m(r, lead) < 0) m.col(lead) = -m.col(lead);
        ++lead;
        break;
      }
    }
  }
  return m.leftCols(lead).eval();
}

namespace {

// Residue enumeration of the embedding equations modulo m. For an even
// target the norm equations are taken in half form q(v) = norm/2 (that is
// the form the parity argument actually constrains; the raw equations are
// trivial mod 2 on an even lattice).
struct ModularCheck {
  bool exhausted = false;   // enumeration completed
  bool solvable = true;     // some assignment satisfied every equation
  long checked = 0;
};

ModularCheck modular_embedding_check(const IMat& source, const IMat& target, int m, long cap) {
  const int r = static_cast<int>(source.rows());
  const int n = static_cast<int>(target.rows());
  const bool even_target = [&] {
    for (int i = 0; i < n; ++i)
      if (target(i, i) % 2 != 0) return false;
    return true;
  }();

  auto mod = [m](const Int& v) {
    const long long x = (v % Int(m)).to_ll();
    return static_cast<int>(((x % m) + m) % m);
  };

  std::vector<std::vector<int>> g(n, std::vector<int>(n));
  std::vector<std::vector<int>> half(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g[i][j] = mod(target(i, j));
      half[i][j] = even_target && i == j ? mod(target(i, j) / 2) : g[i][j];
    }

  long total = 1;
  const int vars = r * n;
  for (int i = 0; i < vars; ++i) {
    if (total > cap / m) return {false, true, 0};
    total *= m;
  }

  // per-vector targets
  std::vector<int> want_norm(r);
  for (int i = 0; i < r; ++i)
    want_norm[i] = even_target ? mod(source(i, i) / 2) : mod(source(i, i));

  std::vector<int> x(static_cast<size_t>(vars), 0);
  auto coord = [&](int vec, int i) { return x[static_cast<size_t>(vec * n + i)]; };

  ModularCheck result;
  result.exhausted = true;
  result.solvable = false;
  for (long step = 0; step < total; ++step) {
    bool ok = true;
    for (int a = 0; a < r && ok; ++a) {
      // half-norm: sum over i<j of g[i][j] x_i x_j + sum_i half[i][i] x_i^2
      long long acc = 0;
      for (int i = 0; i < n; ++i) {
        acc += static_cast<long long>(half[i][i]) * coord(a, i) % m * coord(a, i);
        for (int j = i + 1; j < n; ++j)
          acc += static_cast<long long>(even_target ? g[i][j] : 2 * g[i][j] % m) * coord(a, i) *
                 coord(a, j);
      }
      if (((acc % m) + m) % m != want_norm[a]) ok = false;
      for (int b = a + 1; b < r && ok; ++b) {
        long long cross = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            cross += static_cast<long long>(g[i][j]) * coord(a, i) * coord(b, j);
        if (((cross % m) + m) % m != mod(source(a, b))) ok = false;
      }
    }
    if (ok) {
      result.solvable = true;
      result.checked = step + 1;
      return result;
    }
    // odometer
    for (int i = 0; i < vars; ++i) {
      if (++x[static_cast<size_t>(i)] < m) break;
      x[static_cast<size_t>(i)] = 0;
    }
  }
  result.checked = total;
  return result;
}

}  // namespace

RootEmbedding embeds_root(const Lattice& source, const Lattice& target, int search_bound,
                          const std::vector<int>& moduli) {
  const Eigen::Index r = source.rank(), n = target.rank();
  if (!is_negative_definite(source.gram))
    throw ContractError("embeds_root: source is not negative definite");
  for (Eigen::Index i = 0; i < r; ++i)
    if (source.gram(i, i) != -2)
      throw ContractError("embeds_root: source diagonal must be all -2");
  if (search_bound < 0) throw ContractError("embeds_root: negative search bound");

  RootEmbedding verdict;
  verdict.search_bound = search_bound;

  constexpr long kEnumerationCap = 1L << 22;

  for (int m : moduli) {
    if (m < 2) continue;
    ModularCheck check = modular_embedding_check(source.gram, target.gram, m, kEnumerationCap);
    if (!check.exhausted) {
      verdict.note += "modulus " + std::to_string(m) + " skipped (enumeration too large); ";
      continue;
    }
    if (!check.solvable) {
      verdict.status = RootEmbedding::Status::No;
      verdict.obstruction_modulus = m;
      verdict.residues_checked = check.checked;
      return verdict;
    }
  }

  // witness search over the coordinate box [-bound, bound]^n, lexicographic
  double box = 1;
  for (Eigen::Index i = 0; i < n; ++i) box *= 2 * search_bound + 1;
  if (box > static_cast<double>(kEnumerationCap)) {
    verdict.status = RootEmbedding::Status::Unknown;
    verdict.note += "witness box too large for exhaustive search";
    return verdict;
  }

  std::vector<IVec> candidates;  // all box vectors of norm -2, in lex order
  IVec v = IVec::Constant(n, Int(-search_bound));
  for (;;) {
    if (target.norm(v) == -2) candidates.push_back(v);
    Eigen::Index i = n - 1;
    for (; i >= 0; --i) {
      if (v(i) < search_bound) {
        v(i) += 1;
        for (Eigen::Index j = i + 1; j < n; ++j) v(j) = Int(-search_bound);
        break;
      }
    }
    if (i < 0) break;
  }

  std::vector<IVec> chosen;
  auto search = [&](auto&& self, Eigen::Index k) -> bool {
    if (k == r) return true;
    for (const IVec& cand : candidates) {
      bool ok = true;
      for (Eigen::Index i = 0; i < k && ok; ++i)
        if (target.pair(chosen[static_cast<size_t>(i)], cand) != source.gram(i, k)) ok = false;
      if (!ok) continue;
      chosen.push_back(cand);
      if (self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (search(search, 0)) {
    // re-check the witness Gram before certifying
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j)
        if (target.pair(chosen[static_cast<size_t>(i)], chosen[static_cast<size_t>(j)]) !=
            source.gram(i, j))
          throw Error("embeds_root: witness failed Gram recomputation");
    verdict.status = RootEmbedding::Status::Yes;
    verdict.witness = std::move(chosen);
    return verdict;
  }

  verdict.status = RootEmbedding::Status::Unknown;
  if (verdict.note.empty()) verdict.note = "no witness within bound, no modular obstruction";
  return verdict;
}

}  // namespace nok
