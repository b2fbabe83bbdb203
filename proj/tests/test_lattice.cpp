#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nok/lattice.hpp"
#include "test_util.hpp"

using namespace nok;
using namespace nok::test;

TEST_CASE("root lattice grams") {
  CHECK(exact_eq(root_lattice(RootFamily::A, 1).gram, im({{-2}})));
  CHECK(exact_eq(root_lattice(RootFamily::A, 2).gram, im({{-2, 1}, {1, -2}})));
  CHECK(discriminant(root_lattice(RootFamily::E, 8)) == 1);
  CHECK(discriminant(root_lattice(RootFamily::A, 3)) == -4);  // (-1)^n (n+1)
  CHECK(discriminant(root_lattice(RootFamily::D, 4)) == 4);
  CHECK(discriminant(root_lattice(RootFamily::E, 6)) == 3);
  CHECK(discriminant(root_lattice(RootFamily::E, 7)) == -2);
  CHECK_THROWS_AS(root_lattice(RootFamily::A, 0), ContractError);
  CHECK_THROWS_AS(root_lattice(RootFamily::D, 3), ContractError);
  CHECK_THROWS_AS(root_lattice(RootFamily::E, 9), ContractError);
  for (auto [family, n] : {std::pair{RootFamily::A, 4}, {RootFamily::D, 5}, {RootFamily::E, 6}})
    CHECK(is_negative_definite(root_lattice(family, n).gram));
}

TEST_CASE("hyperbolic plane") {
  const Lattice u = hyperbolic_u();
  CHECK(exact_eq(u.gram, im({{0, 1}, {1, 0}})));
  CHECK(discriminant(u) == -1);
  CHECK(lattice_signature(u) == Signature{1, 1, 0});
  CHECK(is_even(u));
}

TEST_CASE("direct sums") {
  const Lattice ua1 = direct_sum(hyperbolic_u(), root_lattice(RootFamily::A, 1));
  CHECK(ua1.rank() == 3);
  CHECK(exact_eq(ua1.gram, im({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}})));
  CHECK(discriminant(ua1) == 2);  // (-1)·(-2)

  const Lattice empty = make_lattice("0", IMat(0, 0), {});
  CHECK(exact_eq(direct_sum(ua1, empty).gram, ua1.gram));

  // discriminant multiplies, signature adds
  const Lattice a = root_lattice(RootFamily::A, 2);
  const Lattice b = root_lattice(RootFamily::D, 4);
  const Lattice s = direct_sum(a, b);
  CHECK(discriminant(s) == discriminant(a) * discriminant(b));
  const Signature sa = lattice_signature(a), sb = lattice_signature(b), ss = lattice_signature(s);
  CHECK(ss.n_plus == sa.n_plus + sb.n_plus);
  CHECK(ss.n_minus == sa.n_minus + sb.n_minus);

  // label clash gets suffixed, not rejected
  const Lattice twice = direct_sum(root_lattice(RootFamily::A, 1), root_lattice(RootFamily::A, 1));
  CHECK(twice.labels[0] == "r1");
  CHECK(twice.labels[1] == "r1_2");
}

TEST_CASE("parity") {
  CHECK(is_even(root_lattice(RootFamily::A, 2)));
  CHECK_FALSE(is_even(make_lattice("odd", im({{1}}), {"x"})));
  CHECK(is_even(make_lattice("m", im({{-4, -2}, {-2, -4}}), {"p", "q"})));
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(root_lattice(RootFamily::A, 2)) == 3);
  CHECK(discriminant(make_lattice("m", im({{-4, -2}, {-2, -4}}), {"p", "q"})) == 12);
}

TEST_CASE("root enumeration") {
  const auto a1 = roots_of(root_lattice(RootFamily::A, 1));
  REQUIRE(a1.size() == 2);
  CHECK(exact_eq(a1[0], iv({-1})));
  CHECK(exact_eq(a1[1], iv({1})));

  CHECK(roots_of(root_lattice(RootFamily::A, 2)).size() == 6);
  CHECK(roots_of(root_lattice(RootFamily::A, 3)).size() == 12);  // n(n+1)
  CHECK(roots_of(root_lattice(RootFamily::D, 4)).size() == 24);
  CHECK(roots_of(root_lattice(RootFamily::E, 6)).size() == 72);
  CHECK(roots_of(root_lattice(RootFamily::E, 8)).size() == 240);

  CHECK(roots_of(make_lattice("m", im({{-4, -2}, {-2, -4}}), {"p", "q"})).empty());
  CHECK_THROWS_AS(roots_of(hyperbolic_u()), ContractError);

  // repeated runs return the identical sorted set
  const auto once = roots_of(root_lattice(RootFamily::D, 4));
  const auto twice = roots_of(root_lattice(RootFamily::D, 4));
  REQUIRE(once.size() == twice.size());
  for (size_t i = 0; i < once.size(); ++i) CHECK(exact_eq(once[i], twice[i]));
}

TEST_CASE("root sets are symmetric, exact, and span the root lattices") {
  for (const Lattice& l : {root_lattice(RootFamily::A, 3), root_lattice(RootFamily::D, 4),
                           root_lattice(RootFamily::E, 6)}) {
    const auto roots = roots_of(l);
    for (const IVec& x : roots) {
      CHECK(l.norm(x) == -2);
      bool has_negation = false;
      for (const IVec& y : roots)
        if (exact_eq(y, IVec(-x))) has_negation = true;
      CHECK(has_negation);
    }
    const IMat basis = integral_span_basis(roots);
    REQUIRE(basis.cols() == l.rank());
    const Int index = determinant(basis);
    CHECK((index == 1 || index == -1));  // spans the whole lattice over Z
  }
}

TEST_CASE("embedding: A2 into U + A1") {
  const Lattice target = direct_sum(hyperbolic_u(), root_lattice(RootFamily::A, 1));
  const RootEmbedding v = embeds_root(root_lattice(RootFamily::A, 2), target, 3, {2});
  REQUIRE(v.status == RootEmbedding::Status::Yes);
  REQUIRE(v.witness.size() == 2);
  CHECK(target.norm(v.witness[0]) == -2);
  CHECK(target.norm(v.witness[1]) == -2);
  CHECK(target.pair(v.witness[0], v.witness[1]) == 1);
  // deterministic: re-running returns the identical witness
  const RootEmbedding again = embeds_root(root_lattice(RootFamily::A, 2), target, 3, {2});
  CHECK(exact_eq(v.witness[0], again.witness[0]));
  CHECK(exact_eq(v.witness[1], again.witness[1]));
}

TEST_CASE("embedding: A2 into U + [[-4,-2],[-2,-4]] is modularly obstructed") {
  const Lattice mwl = make_lattice("M", im({{-4, -2}, {-2, -4}}), {"DP", "DQ"});
  const Lattice target = direct_sum(hyperbolic_u(), mwl);
  const RootEmbedding v = embeds_root(root_lattice(RootFamily::A, 2), target, 5, {2});
  REQUIRE(v.status == RootEmbedding::Status::No);
  CHECK(v.obstruction_modulus == 2);
  CHECK(v.residues_checked == 256);  // 2^(2 vectors * rank 4)
}

TEST_CASE("embedding: single root embeds wherever a -2 vector exists") {
  const RootEmbedding v =
      embeds_root(root_lattice(RootFamily::A, 1), hyperbolic_u(), 2, {2, 3});
  REQUIRE(v.status == RootEmbedding::Status::Yes);
  CHECK(hyperbolic_u().norm(v.witness[0]) == -2);
}

TEST_CASE("embedding verdict sanity") {
  // no witness in a tiny box and no obstruction: honest Unknown
  const Lattice target = direct_sum(hyperbolic_u(), root_lattice(RootFamily::A, 1));
  const RootEmbedding v = embeds_root(root_lattice(RootFamily::A, 2), target, 0, {3});
  CHECK(v.status == RootEmbedding::Status::Unknown);
  CHECK_THROWS_AS(embeds_root(hyperbolic_u(), target, 2, {2}), ContractError);
}

TEST_CASE("independent residue re-enumeration confirms the mod-2 obstruction") {
  // brute force over all 2^8 assignments of the two coordinate vectors,
  // with half norms (the target is even): the test-side oracle for the
  // certificate produced above
  const Lattice mwl = make_lattice("M", im({{-4, -2}, {-2, -4}}), {"DP", "DQ"});
  const Lattice target = direct_sum(hyperbolic_u(), mwl);
  const IMat& g = target.gram;
  auto halfnorm_mod2 = [&](const IVec& x) {
    Int q(0);
    for (int i = 0; i < 4; ++i) {
      q += (g(i, i) / 2) * x(i) * x(i);
      for (int j = i + 1; j < 4; ++j) q += g(i, j) * x(i) * x(j);
    }
    return static_cast<int>((((q % 2) + 2) % 2).to_ll());
  };
  auto pair_mod2 = [&](const IVec& x, const IVec& y) {
    Int p(0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p += g(i, j) * x(i) * y(j);
    return static_cast<int>((((p % 2) + 2) % 2).to_ll());
  };
  int solutions = 0;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      IVec x(4), y(4);
      for (int i = 0; i < 4; ++i) {
        x(i) = Int((a >> i) & 1);
        y(i) = Int((b >> i) & 1);
      }
      // q(v) = -1 ≡ 1 (mod 2) for both vectors, pairing ≡ 1 (mod 2)
      if (halfnorm_mod2(x) == 1 && halfnorm_mod2(y) == 1 && pair_mod2(x, y) == 1) ++solutions;
    }
  CHECK(solutions == 0);
}
