#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "nok/builtin_models.hpp"
#include "nok/emit.hpp"
#include "nok/nob.hpp"
#include "nok/surface_io.hpp"
#include "test_util.hpp"

using namespace nok;
using namespace nok::test;

namespace {

bool models_equal(const SurfaceModel& a, const SurfaceModel& b) {
  if (a.name != b.name || a.rho != b.rho) return false;
  if (!exact_eq(a.ns_gram, b.ns_gram)) return false;
  if (a.basis_labels != b.basis_labels) return false;
  if (a.curves.size() != b.curves.size() || a.generators.size() != b.generators.size())
    return false;
  for (size_t i = 0; i < a.curves.size(); ++i) {
    if (a.curves[i].label != b.curves[i].label) return false;
    if (!exact_eq(a.curves[i].cls, b.curves[i].cls)) return false;
    if (a.curves[i].self_intersection != b.curves[i].self_intersection) return false;
    if (a.curves[i].irreducible != b.curves[i].irreducible) return false;
  }
  for (size_t i = 0; i < a.generators.size(); ++i) {
    if (a.generators[i].label != b.generators[i].label) return false;
    if (!exact_eq(a.generators[i].cls, b.generators[i].cls)) return false;
  }
  return true;
}

std::string data_path(const std::string& file) { return std::string(NOK_DATA_DIR "/") + file; }

}  // namespace

TEST_CASE("serialize/parse round trip, field for field") {
  for (const std::string& name : builtin_model_names()) {
    const SurfaceModel m = builtin_model(name);
    const ParseResult back = parse_surface(serialize_model(m));
    REQUIRE_MESSAGE(back.ok(), name);
    CHECK(models_equal(m, *back.model));
  }
}

TEST_CASE("bundled fixture files match the builtin models") {
  for (const std::string& name : builtin_model_names()) {
    const ParseResult parsed = load_surface_file(data_path(name + ".surface"));
    REQUIRE_MESSAGE(parsed.ok(), name);
    CHECK(models_equal(*parsed.model, builtin_model(name)));
  }
}

TEST_CASE("parse diagnostics are located and non-throwing") {
  // negative curve of square 0: diagnostic, no model
  const std::string bad = R"({
    "name": "bad", "rho": 2, "basis": ["L", "E"],
    "ns_gram": [[1, 0], [0, -1]],
    "curves": [{"label": "E", "class": [0, 1], "self_intersection": 0, "irreducible": true}],
    "effective_generators": ["E"]
  })";
  const ParseResult r = parse_surface(bad);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.diagnostics.empty());
  bool mentions = false;
  for (const Diagnostic& d : r.diagnostics)
    if (d.message.find("self-intersection") != std::string::npos) mentions = true;
  CHECK(mentions);

  // unknown generator label
  const std::string unknown = R"({
    "name": "bad2", "rho": 1, "basis": ["L"], "ns_gram": [[1]],
    "curves": [], "effective_generators": ["Z"]
  })";
  const ParseResult r2 = parse_surface(unknown);
  CHECK_FALSE(r2.ok());

  // malformed JSON: located at a byte offset
  const ParseResult r3 = parse_surface("{ not json");
  CHECK_FALSE(r3.ok());
  CHECK(r3.diagnostics.front().where.find("byte") != std::string::npos);

  // signature mismatch
  const std::string sig = R"({
    "name": "bad3", "rho": 2, "basis": ["a", "b"], "ns_gram": [[1, 0], [0, 1]],
    "curves": [], "effective_generators": [{"label": "a", "class": [1, 0]}]
  })";
  const ParseResult r4 = parse_surface(sig);
  CHECK_FALSE(r4.ok());
  bool sig_mentioned = false;
  for (const Diagnostic& d : r4.diagnostics)
    if (d.message.find("signature") != std::string::npos) sig_mentioned = true;
  CHECK(sig_mentioned);

  // negative curve absent from the generators
  const std::string missing = R"({
    "name": "bad4", "rho": 2, "basis": ["L", "E"], "ns_gram": [[1, 0], [0, -1]],
    "curves": [{"label": "E", "class": [0, 1], "self_intersection": -1, "irreducible": true}],
    "effective_generators": [{"label": "C", "class": [1, -1]}]
  })";
  const ParseResult r5 = parse_surface(missing);
  CHECK_FALSE(r5.ok());
  bool missing_mentioned = false;
  for (const Diagnostic& d : r5.diagnostics)
    if (d.message.find("missing from the effective generators") != std::string::npos)
      missing_mentioned = true;
  CHECK(missing_mentioned);
}

TEST_CASE("elliptic block generates the model") {
  const std::string text = R"({
    "name": "k3_s1",
    "elliptic": {"chi": 2, "fibres": [{"type": "I2"}], "rho": 3}
  })";
  const ParseResult r = parse_surface(text);
  REQUIRE(r.ok());
  CHECK(models_equal(*r.model, model_k3_s1()));

  // elliptic together with explicit fields is rejected
  const std::string both = R"({
    "name": "x", "rho": 3,
    "elliptic": {"chi": 2, "fibres": [{"type": "I2"}]}
  })";
  CHECK_FALSE(parse_surface(both).ok());
}

TEST_CASE("divisor expression parsing") {
  const DivisorExpr e = parse_divisor_expr("3L - E");
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].first == "L");
  CHECK(e.terms[0].second == Rational(3));
  CHECK(e.terms[1].first == "E");
  CHECK(e.terms[1].second == Rational(-1));

  const DivisorExpr f = parse_divisor_expr("1/2 O + F");
  CHECK(f.terms[0].second == Rational(1, 2));
  CHECK(parse_divisor_expr("2*L").terms[0].second == Rational(2));
  CHECK(parse_divisor_expr("-L").terms[0].second == Rational(-1));
  CHECK(parse_divisor_expr(" 3 / 2 L ").terms[0].second == Rational(3, 2));

  CHECK_THROWS_AS(parse_divisor_expr(""), ContractError);
  CHECK_THROWS_AS(parse_divisor_expr("3L +"), ContractError);
  CHECK_THROWS_AS(parse_divisor_expr("L E"), ContractError);
  CHECK_THROWS_AS(parse_divisor_expr("3/0 L"), ContractError);
  CHECK_THROWS_AS(parse_divisor_expr("+ - L"), ContractError);

  const SurfaceModel f1 = model_f1();
  CHECK(exact_eq(parse_divisor(f1, "3L - E"), rv({3, -1})));
  CHECK(exact_eq(parse_divisor(f1, "C"), rv({1, -1})));  // curve label resolves
  CHECK_THROWS_AS(parse_divisor(f1, "3L - X"), ContractError);
}

TEST_CASE("divisor expression round trip on random expressions") {
  std::mt19937_64 rng(13371337);
  const std::vector<std::string> labels = {"L", "E", "C", "O", "F", "Theta1_0"};
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> len(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    DivisorExpr e;
    const int terms = len(rng);
    for (int i = 0; i < terms; ++i)
      e.terms.emplace_back(labels[pick(rng)], Rational(num(rng), den(rng)));
    const DivisorExpr back = parse_divisor_expr(print_divisor_expr(e));
    REQUIRE(back.terms.size() == e.terms.size());
    for (size_t i = 0; i < e.terms.size(); ++i) {
      CHECK(back.terms[i].first == e.terms[i].first);
      CHECK(back.terms[i].second == e.terms[i].second);
    }
  }
}

TEST_CASE("lattice serialization round trip") {
  const Lattice l = direct_sum(hyperbolic_u(), root_lattice(RootFamily::A, 2));
  const Lattice back = parse_lattice(serialize_lattice(l));
  CHECK(back.name == l.name);
  CHECK(exact_eq(back.gram, l.gram));
  CHECK(back.labels == l.labels);
}

TEST_CASE("csv emitter is the exact golden format") {
  const SurfaceModel f1 = model_f1();
  const NOBPolygon quad = polygon(f1, parse_divisor(f1, "3L - E"), FlagSpec{"E", {}});
  CHECK(polygon_csv(quad) == "0,0\n2,0\n2,3\n0,1\n");

  const NOBPolygon five = polygon(f1, parse_divisor(f1, "3L - E"), FlagSpec{"N", {{"E", 1}}});
  CHECK(polygon_csv(five) == "0,0\n1/2,0\n1,1\n1/2,9/2\n0,7\n");
}

TEST_CASE("svg emitter is deterministic and well-formed") {
  const SurfaceModel f1 = model_f1();
  const NOBPolygon quad = polygon(f1, parse_divisor(f1, "3L - E"), FlagSpec{"E", {}});
  const std::string svg = polygon_svg(quad);
  CHECK(svg == polygon_svg(quad));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polygon") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("ns model serialization carries the distinguished classes") {
  const NSModel ns = build_ns(spec_k3_s1());
  const std::string text = serialize_ns_model(ns);
  CHECK(text.find("Theta1_0") != std::string::npos);
  CHECK(text.find("\"O\"") != std::string::npos);
}
