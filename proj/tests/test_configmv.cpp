#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nok/builtin_models.hpp"
#include "nok/configmv.hpp"
#include "test_util.hpp"

using namespace nok;
using namespace nok::test;

namespace {

MvReport mv_of_model(const SurfaceModel& m) {
  std::vector<CurveRecord> negatives;
  for (int i : m.negative_curve_indices()) negatives.push_back(m.curves[static_cast<size_t>(i)]);
  return mv_surface(m.rho, negatives, m.ns_gram);
}

}  // namespace

TEST_CASE("mc of the benchmark configurations") {
  // N1 = {(O), Theta0} meeting once
  CHECK(mc_of(NegConfig{{0, 1}, im({{-2, 1}, {1, -2}})}) == 2);
  // N2 = three pairwise-disjoint (-2)-curves
  CHECK(mc_of(NegConfig{{0, 1, 2}, im({{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}})}) == 1);
  CHECK(mc_of(NegConfig{{}, IMat(0, 0)}) == 0);
  // chain of three
  CHECK(mc_of(NegConfig{{0, 1, 2}, im({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}})}) == 3);
}

TEST_CASE("mv of a configuration") {
  CHECK(mv_of_config(NegConfig{{0, 1}, im({{-2, 1}, {1, -2}})}, 3) == 7);   // 2 + 2 + 3
  CHECK(mv_of_config(NegConfig{{0}, im({{-2}})}, 2) == 5);                  // 1 + 1 + 3
  CHECK(mv_of_config(NegConfig{{}, IMat(0, 0)}, 5) == 4);                   // 0 + 0 + 4
  CHECK(mv_of_config(NegConfig{{}, IMat(0, 0)}, 1) == 3);                   // 0 + 0 + 3
  CHECK_THROWS_AS(mv_of_config(NegConfig{{0, 1}, im({{-2, 0}, {0, -2}})}, 2), ContractError);
}

TEST_CASE("mv_surface on the S1 geometric configuration") {
  // curves (O), Theta0, Theta1 with the geometric intersection matrix
  const IMat gram = im({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});  // NS = U + A1, basis e,f,a
  std::vector<CurveRecord> curves = {
      {"O", iv({1, -1, 0}), Int(-2), true},
      {"Theta0", iv({0, 1, -1}), Int(-2), true},
      {"Theta1", iv({0, 0, 1}), Int(-2), true},
  };
  const MvReport r = mv_surface(3, curves, gram);
  CHECK(r.mv_value == 7);
  CHECK(r.certified);
  CHECK(r.upper_bound_used == 7);
  REQUIRE(r.witness_labels.size() == 2);
  CHECK(r.witness_labels[0] == "O");
  CHECK(r.witness_labels[1] == "Theta0");  // {O, Theta0}: k=2=rho-1, mc=2
  // the pair {Theta0, Theta1} has degenerate Gram and must never be chosen
  CHECK(mv_of_config(r.witness, 3) == 7);
}

TEST_CASE("mv_surface on the bundled models") {
  CHECK(mv_of_model(model_p2()).mv_value == 3);
  CHECK(mv_of_model(model_p1xp1()).mv_value == 4);
  CHECK(mv_of_model(model_p1xe()).mv_value == 4);
  CHECK(mv_of_model(model_exe()).mv_value == 4);
  CHECK(mv_of_model(model_f1()).mv_value == 5);
  const MvReport s1 = mv_of_model(model_k3_s1());
  CHECK(s1.mv_value == 7);
  CHECK(s1.certified);
  const MvReport s2 = mv_of_model(model_k3_s2());
  CHECK(s2.mv_value == 7);
  CHECK(s2.certified);
  CHECK(s2.upper_bound_used == 7);  // rho + 3, not 2*rho + 1 = 9
}

TEST_CASE("mv_surface rejects bad curve lists") {
  const IMat gram = im({{1, 0}, {0, -1}});
  CHECK_THROWS_AS(
      mv_surface(2, {{"X", iv({1, 0}), Int(1), true}}, gram),
      DomainError);  // non-negative curve
  CHECK_THROWS_AS(
      mv_surface(2, {{"E", iv({0, 1}), Int(-2), true}}, gram),
      DomainError);  // self-intersection does not match the class
  CHECK_THROWS_AS(
      mv_surface(2, {{"E", iv({0, 1}), Int(-1), false}}, gram),
      DomainError);  // irreducibility not asserted
}

TEST_CASE("mv_surface is monotone in the curve list") {
  const SurfaceModel f1 = model_f1();
  std::vector<CurveRecord> negatives;
  for (int i : f1.negative_curve_indices()) negatives.push_back(f1.curves[static_cast<size_t>(i)]);
  const int with_all = mv_surface(f1.rho, negatives, f1.ns_gram).mv_value;
  const int with_none = mv_surface(f1.rho, {}, f1.ns_gram).mv_value;
  CHECK(with_none <= with_all);
  CHECK(with_none == 4);
  CHECK(with_all == 5);
}

TEST_CASE("enumerated configurations satisfy the structural bounds") {
  const SurfaceModel s1 = model_k3_s1();
  std::vector<CurveRecord> negatives;
  for (int i : s1.negative_curve_indices()) negatives.push_back(s1.curves[static_cast<size_t>(i)]);
  const MvReport r = mv_surface(s1.rho, negatives, s1.ns_gram);
  CHECK(r.witness.k() <= s1.rho - 1);
  CHECK(mc_of(r.witness) <= std::max(1, r.witness.k()));
  CHECK(3 <= r.mv_value);
  CHECK(r.mv_value <= 2 * s1.rho + 1);
}

TEST_CASE("A2 upper bound") {
  const Lattice ns2 = make_lattice(
      "NS2", im({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -4, -2}, {0, 0, -2, -4}}),
      {"e", "f", "DP", "DQ"});
  const A2Bound b2 = mv_upper_bound_via_a2(ns2, true);
  CHECK(b2.bound == 7);
  CHECK(b2.obstruction_used);

  const Lattice ns1 = make_lattice("NS1", im({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}), {"e", "f", "a"});
  const A2Bound b1 = mv_upper_bound_via_a2(ns1, true);
  CHECK(b1.bound == 7);  // 2*rho + 1
  CHECK_FALSE(b1.obstruction_used);

  const Lattice u = hyperbolic_u();
  CHECK(mv_upper_bound_via_a2(u, true).bound == 5);

  CHECK_THROWS_AS(mv_upper_bound_via_a2(u, false), ContractError);
}

TEST_CASE("picard classification") {
  CHECK(classify_picard(3, false).kind == PicardConstraint::Kind::ExactRho);
  CHECK(classify_picard(3, false).rho == 1);
  CHECK(classify_picard(4, false).kind == PicardConstraint::Kind::NoNegativesRhoAtLeastTwo);
  CHECK(classify_picard(5, true).rho == 2);
  CHECK(classify_picard(5, false).kind == PicardConstraint::Kind::NoConstraint);
  CHECK(classify_picard(7, true).kind == PicardConstraint::Kind::NoConstraint);
  CHECK_THROWS_AS(classify_picard(4, true), DomainError);
  CHECK_THROWS_AS(classify_picard(3, true), DomainError);
  CHECK_THROWS_AS(classify_picard(2, false), ContractError);
}

TEST_CASE("elliptic surface corollary: chi > 0 and mv = 5 pin rho = 2") {
  // (O)^2 = -chi < 0, so the zero section is a negative curve
  const PicardConstraint c = classify_picard(5, true);
  CHECK(c.kind == PicardConstraint::Kind::ExactRho);
  CHECK(c.rho == 2);
}
