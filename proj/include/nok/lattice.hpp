#pragma once

#include <string>
#include <vector>

#include "nok/linalg.hpp"
#include "nok/matrix.hpp"

namespace nok {

/// Integral lattice: rank, symmetric integer Gram matrix, one label per
/// basis vector. Nondegeneracy is checked at construction unless the
/// caller explicitly asks for a degenerate Gram wrapper.
struct Lattice {
  std::string name;
  IMat gram;
  std::vector<std::string> labels;

  Eigen::Index rank() const { return gram.rows(); }

  /// Pairing of two coordinate vectors under this Gram.
  Int pair(const IVec& x, const IVec& y) const;
  Int norm(const IVec& x) const { return pair(x, x); }
};

Lattice make_lattice(std::string name, IMat gram, std::vector<std::string> labels,
                     bool allow_degenerate = false);

enum class RootFamily { A, D, E };

/// Negative-definite Coxeter–Dynkin Gram: -2 on the diagonal, +1 between
/// adjacent vertices. Valid ranks: A n≥1, D n≥4, E n∈{6,7,8}.
Lattice root_lattice(RootFamily family, int n);

/// The hyperbolic plane U = [[0,1],[1,0]], basis labels e, f.
Lattice hyperbolic_u();

/// Block-diagonal sum; ranks add, discriminants multiply. Clashing labels
/// from the right summand get a numeric suffix.
Lattice direct_sum(const Lattice& a, const Lattice& b);

Int discriminant(const Lattice& l);
bool is_even(const Lattice& l);
Signature lattice_signature(const Lattice& l);

/// All vectors of self-pairing -2 in a negative-definite lattice, sorted
/// lexicographically (both x and -x appear). Completeness comes from the
/// exact diagonalization bound, not from a heuristic search radius.
std::vector<IVec> roots_of(const Lattice& l);

/// Column-style Hermite reduction of a generating set; the returned columns
/// are a basis of the integer span.
IMat integral_span_basis(const std::vector<IVec>& vectors);

/// Decision certificate for embedding a root lattice into a target lattice.
///
/// Yes carries explicit vectors whose pairwise Gram reproduces the source;
/// No carries a modulus for which the full residue enumeration of the Gram
/// equations has no solution; Unknown means neither certificate was found
/// within the configured bounds.
struct RootEmbedding {
  enum class Status { Yes, No, Unknown };
  Status status = Status::Unknown;
  std::vector<IVec> witness;        // when Yes
  int obstruction_modulus = 0;      // when No
  long residues_checked = 0;        // when No: size of the exhausted enumeration
  int search_bound = 0;
  std::string note;
};

RootEmbedding embeds_root(const Lattice& source, const Lattice& target, int search_bound = 6,
                          const std::vector<int>& moduli = {2, 3, 4});

}  // namespace nok
