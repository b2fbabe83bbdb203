#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nok/builtin_models.hpp"
#include "nok/surface_io.hpp"
#include "nok/zariski.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nok;
using namespace nok::test;

TEST_CASE("pseudo-effectivity on F1") {
  const SurfaceModel f1 = model_f1();
  CHECK(is_pseudo_effective(f1, parse_divisor(f1, "L + 2E")));
  CHECK_FALSE(is_pseudo_effective(f1, rv({-1, 0})));
  for (const GeneratorRecord& g : f1.generators)
    CHECK(is_pseudo_effective(f1, to_rational(g.cls)));
}

TEST_CASE("zariski on F1: L + 2E") {
  const SurfaceModel f1 = model_f1();
  const ZariskiDecomposition z = zariski_decompose(f1, parse_divisor(f1, "L + 2E"));
  CHECK(exact_eq(z.positive, rv({1, 0})));
  REQUIRE(z.negative_coeffs.size() == 1);
  CHECK(z.negative_coeffs[0].first == "E");
  CHECK(z.negative_coeffs[0].second == Rational(2));
}

TEST_CASE("zariski of a nef divisor is trivial") {
  const SurfaceModel f1 = model_f1();
  const RVec d = parse_divisor(f1, "3L - E");  // ample
  const ZariskiDecomposition z = zariski_decompose(f1, d);
  CHECK(exact_eq(z.positive, d));
  CHECK(z.negative_coeffs.empty());
  CHECK(nu_of(f1, d, "E") == Rational(0));
}

TEST_CASE("zariski on the S1 chamber: O + F") {
  const SurfaceModel s1 = model_k3_s1();
  const RVec d = parse_divisor(s1, "O + F");
  const ZariskiDecomposition z = zariski_decompose(s1, d);
  REQUIRE(z.negative_coeffs.size() == 1);
  CHECK(z.negative_coeffs[0].first == "O");
  CHECK(z.negative_coeffs[0].second == Rational(1, 2));
  // P = D - (1/2) O pairs to zero with O and nonnegatively with everything
  CHECK(s1.pair(z.positive, to_rational(s1.find_curve("O")->cls)) == Rational(0));
  CHECK(s1.pair(z.positive, to_rational(s1.find_curve("Theta1_0")->cls)) == Rational(1, 2));
  CHECK(s1.pair(z.positive, to_rational(s1.find_curve("Theta1_1")->cls)) == Rational(0));
  CHECK(nu_of(s1, d, "O") == Rational(1, 2));
}

TEST_CASE("zariski rejects non-pseudo-effective input") {
  const SurfaceModel f1 = model_f1();
  CHECK_THROWS_AS(zariski_decompose(f1, rv({-1, 0})), DomainError);
  CHECK_THROWS_AS(nu_of(f1, parse_divisor(f1, "L"), "Z"), ContractError);  // unknown label
}

TEST_CASE("mu on the bundled examples") {
  const SurfaceModel f1 = model_f1();
  CHECK(mu_of(f1, parse_divisor(f1, "3L - E"), "E") == Rational(2));
  CHECK(mu_of(f1, parse_divisor(f1, "3L - E"), "C") == Rational(3));
  const SurfaceModel p2 = model_p2();
  CHECK(mu_of(p2, parse_divisor(p2, "L"), "L") == Rational(1));
}

TEST_CASE("mu bounded and unbounded directions") {
  const SurfaceModel p1xp1 = model_p1xp1();
  CHECK(mu_of(p1xp1, parse_divisor(p1xp1, "2H1 + 3H2"), "H1") == Rational(2));

  // a chamber whose generator list contains a line (-H1 declared effective):
  // D - t·H1 then never leaves the cone and mu must error out
  SurfaceModel weird = p1xp1;
  weird.generators.push_back({"negH1", test::iv({-1, 0})});
  CHECK_THROWS_AS(mu_of(weird, parse_divisor(weird, "2H1 + 3H2"), "H1"), DomainError);
}

TEST_CASE("zariski properties against the brute-force oracle") {
  std::mt19937_64 rng(424242);
  for (const SurfaceModel& model : {model_p2(), model_f1(), model_k3_s1()}) {
    for (int trial = 0; trial < 120; ++trial) {
      const RVec d = random_pseudo_effective(model, rng, 6);
      const ZariskiDecomposition z = zariski_decompose(model, d);

      // reconstruction
      RVec recon = z.positive + z.negative;
      CHECK(exact_eq(recon, d));
      // orthogonality and positivity
      for (const auto& [label, a] : z.negative_coeffs) {
        CHECK(a.sign() > 0);
        CHECK(model.pair(z.positive, to_rational(model.find_curve(label)->cls)) == Rational(0));
      }
      // nefness against the generators
      for (const GeneratorRecord& g : model.generators)
        CHECK(model.pair(z.positive, to_rational(g.cls)).sign() >= 0);
      // support gram negative definite
      {
        const int k = static_cast<int>(z.negative_coeffs.size());
        RMat g(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            g(i, j) = model.pair(
                to_rational(model.find_curve(z.negative_coeffs[static_cast<size_t>(i)].first)->cls),
                to_rational(model.find_curve(z.negative_coeffs[static_cast<size_t>(j)].first)->cls));
        CHECK(is_negative_definite(g));
      }
      // equality with the all-subsets oracle
      CHECK(oracle_matches(model, d, z));
    }
  }
}

TEST_CASE("volume decreases along D - tC") {
  const SurfaceModel f1 = model_f1();
  const RVec d = parse_divisor(f1, "3L - E");
  const RVec c = to_rational(f1.find_curve("E")->cls);
  Rational prev = f1.pair(d, d);
  for (int step = 1; step <= 4; ++step) {
    const Rational t(step, 2);
    const ZariskiDecomposition z = zariski_decompose(f1, d - c * t);
    const Rational vol = f1.pair(z.positive, z.positive);
    CHECK(vol <= prev);
    prev = vol;
  }
}
