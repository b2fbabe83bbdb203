#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nok/ellsurf.hpp"
#include "nok/surface.hpp"

namespace nok {

struct Diagnostic {
  std::string where;  // JSON-pointer-ish location inside the file
  std::string message;
};

struct ParseResult {
  std::optional<SurfaceModel> model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value() && diagnostics.empty(); }
};

/// Parses and fully validates a surface spec file. Never throws on bad
/// input: every failed invariant becomes one located diagnostic.
ParseResult parse_surface(const std::string& text);
ParseResult load_surface_file(const std::string& path);

std::string serialize_model(const SurfaceModel& model);
std::string serialize_ns_model(const NSModel& ns);
std::string serialize_lattice(const Lattice& l);
Lattice parse_lattice(const std::string& text);

/// Builds the surface model generated by an elliptic block: NS lattice from
/// the Shioda–Tate data, curves (O), fibre components and sections, and the
/// chamber generators (all curves plus the fibre class F).
SurfaceModel model_from_elliptic(const std::string& name, const EllipticSurfaceSpec& spec);

EllipticSurfaceSpec parse_elliptic_spec(const std::string& text);

/// Textual linear combination over labels: "3L - E", "1/2 O + F".
struct DivisorExpr {
  std::vector<std::pair<std::string, Rational>> terms;
};

DivisorExpr parse_divisor_expr(const std::string& text);
std::string print_divisor_expr(const DivisorExpr& expr);
RVec resolve_divisor(const SurfaceModel& model, const DivisorExpr& expr);
RVec parse_divisor(const SurfaceModel& model, const std::string& text);
DivisorClass parse_divisor_class(const SurfaceModel& model, const std::string& text);

}  // namespace nok
