#pragma once

#include "nok/ellsurf.hpp"
#include "nok/surface.hpp"

namespace nok {

/// The bundled test-bed surfaces. Each model declares its NS basis, the
/// curves relevant to the chamber being explored, and the generators of
/// that chamber of the effective cone.
SurfaceModel model_p2();
SurfaceModel model_p1xp1();
SurfaceModel model_p1xe();
SurfaceModel model_exe();
SurfaceModel model_f1();
SurfaceModel model_k3_s1();
SurfaceModel model_k3_s2();

EllipticSurfaceSpec spec_k3_s1();
EllipticSurfaceSpec spec_k3_s2();

SurfaceModel builtin_model(const std::string& name);  // throws on unknown name
std::vector<std::string> builtin_model_names();

}  // namespace nok
