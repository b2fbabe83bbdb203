#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nok/cone.hpp"
#include "nok/jet.hpp"
#include "nok/linalg.hpp"
#include "test_util.hpp"

using namespace nok;
using namespace nok::test;

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational r(Int(6), Int(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational(Int(1), Int(0)));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
}

TEST_CASE("negative definiteness on the bundled examples") {
  CHECK(is_negative_definite(rm({{-2}})));
  CHECK(is_negative_definite(rm({{-2, 1}, {1, -2}})));
  CHECK_FALSE(is_negative_definite(rm({{-2, 2}, {2, -2}})));  // degenerate, cleanly rejected
  CHECK_FALSE(is_negative_definite(rm({{1}})));
  CHECK(is_negative_definite(RMat(0, 0)));  // empty configuration
  CHECK_THROWS_AS(is_negative_definite(rm({{0, 1}, {2, 0}})), ContractError);
}

TEST_CASE("signature examples") {
  CHECK(signature_of(rm({{0, 1}, {1, 0}})) == Signature{1, 1, 0});
  CHECK(signature_of(rm({{-2, 1}, {1, -2}})) == Signature{0, 2, 0});
  CHECK(signature_of(rm({{0}})) == Signature{0, 0, 1});
  CHECK(signature_of(rm({{-2, 2}, {2, -2}})) == Signature{0, 1, 1});
}

TEST_CASE("solve_linear outcomes") {
  RMat identity = rm({{1, 0}, {0, 1}});
  RVec b = rv({4, 9});
  auto sol = solve_linear<Rational>(identity, b);
  REQUIRE(sol.status == SolveStatus::Unique);
  CHECK(exact_eq(sol.x, b));

  auto sol2 = solve_linear<Rational>(rm({{-2, 1}, {1, -2}}), rv({-2, 1}));
  REQUIRE(sol2.status == SolveStatus::Unique);
  CHECK(exact_eq(sol2.x, rv({1, 0})));

  CHECK(solve_linear<Rational>(rm({{-2, 2}, {2, -2}}), rv({1, 0})).status ==
        SolveStatus::NoSolution);
  CHECK(solve_linear<Rational>(rm({{1, 1}}), rv({1})).status == SolveStatus::Underdetermined);
}

TEST_CASE("solve_linear is exact on random systems") {
  std::mt19937_64 rng(20240915);
  std::uniform_int_distribution<int> entry(-5, 5);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    RMat a(n, n);
    RVec x(n);
    for (int i = 0; i < n; ++i) {
      x(i) = Rational(entry(rng), 1 + static_cast<long long>(rng() % 7));
      for (int j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
    }
    RVec b = a * x;
    auto sol = solve_linear<Rational>(a, b);
    if (sol.status != SolveStatus::Unique) continue;  // singular draw
    ++solved;
    RVec recon = a * sol.x;
    CHECK(exact_eq(recon, b));
  }
  CHECK(solved > 200);
}

TEST_CASE("definiteness agrees with the inertia count on random symmetric matrices") {
  std::mt19937_64 rng(7151);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    RMat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) g(i, j) = g(j, i) = Rational(entry(rng));
    const Signature s = signature_of(g);
    CHECK(s.n_plus + s.n_minus + s.n_zero == n);
    CHECK(is_negative_definite(g) == (s.n_plus == 0 && s.n_zero == 0));
  }
}

TEST_CASE("cone membership certificates") {
  std::vector<RVec> gens = {rv({1, 0}), rv({0, 1})};
  auto q = cone_contains(gens, rv({2, 3}));
  REQUIRE(q.member);
  CHECK(exact_eq(q.coefficients, rv({2, 3})));

  auto q2 = cone_contains(gens, rv({-1, 0}));
  REQUIRE_FALSE(q2.member);
  CHECK(q2.separator.dot(rv({-1, 0})).sign() < 0);

  // F1 chamber: gens E=(0,1), L-E=(1,-1); L+2E = 1·(L-E) + 3·E
  std::vector<RVec> f1 = {rv({0, 1}), rv({1, -1})};
  auto q3 = cone_contains(f1, rv({1, 2}));
  REQUIRE(q3.member);
  CHECK(q3.coefficients(0) == Rational(3));
  CHECK(q3.coefficients(1) == Rational(1));

  CHECK_THROWS_AS(cone_contains({}, rv({1})), ContractError);
  CHECK_THROWS_AS(cone_contains(gens, rv({1})), ContractError);
}

TEST_CASE("cone certificates verify on random queries") {
  std::mt19937_64 rng(99123);
  std::uniform_int_distribution<int> entry(-4, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 5);
    std::vector<RVec> gens;
    for (int k = 0; k < m; ++k) {
      RVec g(dim);
      for (int i = 0; i < dim; ++i) g(i) = Rational(entry(rng));
      gens.push_back(std::move(g));
    }
    RVec x(dim);
    for (int i = 0; i < dim; ++i) x(i) = Rational(entry(rng));
    const ConeQuery q = cone_contains(gens, x);
    if (q.member) {
      RVec recon = RVec::Zero(dim);
      for (int k = 0; k < m; ++k) {
        CHECK(q.coefficients(k).sign() >= 0);
        recon += gens[static_cast<size_t>(k)] * q.coefficients(k);
      }
      CHECK(exact_eq(recon, x));
    } else {
      for (const RVec& g : gens) CHECK(q.separator.dot(g).sign() >= 0);
      CHECK(q.separator.dot(x).sign() < 0);
    }
  }
}

TEST_CASE("cone_max_param on the bundled examples") {
  std::vector<RVec> f1 = {rv({0, 1}), rv({1, -1})};  // E, L-E in basis (L, E)
  auto m = cone_max_param(f1, rv({3, -1}), rv({0, 1}));
  REQUIRE(m.bounded);
  CHECK(m.value == Rational(2));

  std::vector<RVec> ray = {rv({1})};
  auto m2 = cone_max_param(ray, rv({1}), rv({1}));
  REQUIRE(m2.bounded);
  CHECK(m2.value == Rational(1));

  auto m3 = cone_max_param({rv({1, 0}), rv({0, 1})}, rv({1, 1}), rv({0, -1}));
  CHECK_FALSE(m3.bounded);

  RVec outside = rv({-1, 0});
  CHECK_THROWS_AS(cone_max_param(f1, outside, rv({0, 1})), ContractError);
}

TEST_CASE("cone_max_param is the exact feasibility breakpoint") {
  // membership holds at t* and fails at t* + 1/1000, on a spread of cases
  std::mt19937_64 rng(5511);
  std::uniform_int_distribution<int> entry(0, 5);
  const std::vector<std::vector<RVec>> cones = {
      {rv({0, 1}), rv({1, -1})},
      {rv({1, 0}), rv({0, 1})},
      {rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 1})},
  };
  int bounded_cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& gens = cones[trial % cones.size()];
    const int dim = static_cast<int>(gens.front().size());
    RVec d = RVec::Zero(dim);
    for (const RVec& g : gens) d += g * Rational(entry(rng));
    RVec c(dim);
    for (int i = 0; i < dim; ++i) c(i) = Rational(entry(rng) - 2);
    if (is_zero(c)) continue;
    const ConeMax m = cone_max_param(gens, d, c);
    if (!m.bounded) continue;
    ++bounded_cases;
    const Rational eps(1, 1000);
    RVec at = d - c * m.value;
    RVec beyond = d - c * (m.value + eps);
    CHECK(cone_contains(gens, at).member);
    CHECK_FALSE(cone_contains(gens, beyond).member);
  }
  CHECK(bounded_cases > 60);
}

TEST_CASE("jets order lexicographically and divide exactly") {
  Jet a(Rational(1), Rational(-2));
  Jet b(Rational(1), Rational(-1));
  CHECK(a < b);
  CHECK(Jet(Rational(0), Rational(1)).sign() == 1);
  CHECK(Jet(Rational(0), Rational(-1)).sign() == -1);
  Jet q = a / Jet(Rational(2));
  CHECK(q.val == Rational(1, 2));
  CHECK(q.eps == Rational(-1));
  CHECK_THROWS(a / Jet(Rational(0), Rational(1)));
  // solve over jets: constant matrix, affine rhs
  Mat<Jet> m(2, 2);
  m << Jet(Rational(2)), Jet(Rational(1)), Jet(Rational(1)), Jet(Rational(3));
  Vec<Jet> rhs(2);
  rhs << Jet(Rational(1), Rational(1)), Jet(Rational(0), Rational(-1));
  auto sol = solve_linear<Jet>(m, rhs);
  REQUIRE(sol.status == SolveStatus::Unique);
  Vec<Jet> recon = m * sol.x;
  CHECK(exact_eq(recon, rhs));
}
