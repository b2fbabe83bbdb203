#include "nok/verify.hpp"

#include "nok/builtin_models.hpp"
#include "nok/configmv.hpp"
#include "nok/nob.hpp"
#include "nok/surface_io.hpp"
#include "nok/zariski.hpp"

namespace nok {

namespace {

MvReport mv_of_model(const SurfaceModel& m) {
  std::vector<CurveRecord> negatives;
  for (int i : m.negative_curve_indices()) negatives.push_back(m.curves[static_cast<size_t>(i)]);
  return mv_surface(m.rho, negatives, m.ns_gram);
}

std::string mv_str(const MvReport& r) {
  std::string s = std::to_string(r.mv_value);
  if (r.certified) s += " certified ub=" + std::to_string(r.upper_bound_used);
  return s;
}

std::string poly_str(const NOBPolygon& p) {
  std::string s;
  for (const auto& [t, y] : p.vertices) s += "(" + t.str() + "," + y.str() + ") ";
  s += "area=" + p.area.str();
  return s;
}

std::string zariski_str(const ZariskiDecomposition& z) {
  std::string s = "P=(";
  for (Eigen::Index i = 0; i < z.positive.size(); ++i)
    s += (i ? "," : "") + z.positive(i).str();
  s += ") N=";
  if (z.negative_coeffs.empty()) s += "0";
  for (size_t i = 0; i < z.negative_coeffs.size(); ++i)
    s += (i ? "+" : "") + z.negative_coeffs[i].second.str() + "*" + z.negative_coeffs[i].first;
  return s;
}

std::string gram_str(const IMat& g) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    s += i ? ";" : "";
    for (Eigen::Index j = 0; j < g.cols(); ++j) s += (j ? "," : "") + g(i, j).str();
  }
  return s + "]";
}

}  // namespace

std::vector<VerifyRow> verify_paper_rows() {
  std::vector<VerifyRow> rows;
  auto add = [&](const std::string& name, const std::string& expected,
                 const std::string& computed) {
    rows.push_back({name, expected, computed, expected == computed});
  };

  // ---- maximal vertex counts over the bundled surfaces
  add("mv(p2)", "3 certified ub=3", mv_str(mv_of_model(model_p2())));
  add("mv(p1xp1)", "4", mv_str(mv_of_model(model_p1xp1())));
  add("mv(p1xe)", "4", mv_str(mv_of_model(model_p1xe())));
  add("mv(f1)", "5 certified ub=5", mv_str(mv_of_model(model_f1())));
  add("mv(exe)", "4", mv_str(mv_of_model(model_exe())));
  add("mv(k3_s1)", "7 certified ub=7", mv_str(mv_of_model(model_k3_s1())));
  add("mv(k3_s2)", "7 certified ub=7", mv_str(mv_of_model(model_k3_s2())));
  {
    const MvReport s2 = mv_of_model(model_k3_s2());
    add("mv(k3_s2) bound source", "A2 obstruction",
        s2.note.find("A2-obstruction") != std::string::npos ? "A2 obstruction" : s2.note);
  }

  // ---- lattice identities
  const Lattice u = hyperbolic_u();
  add("disc(U)", "-1", discriminant(u).str());
  {
    const Signature s = lattice_signature(u);
    add("signature(U)", "(1,1,0)",
        "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," +
            std::to_string(s.n_zero) + ")");
  }
  {
    // geometric basis ((O), F, Theta1) vs abstract U + A1 via e=(O)+F, f=F
    IMat geo(3, 3);
    geo << Int(-2), Int(1), Int(0), Int(1), Int(0), Int(0), Int(0), Int(0), Int(-2);
    IMat base_change(3, 3);
    base_change << Int(1), Int(0), Int(0), Int(1), Int(1), Int(0), Int(0), Int(0), Int(1);
    IMat transformed = base_change.transpose() * geo * base_change;
    const Lattice expected = direct_sum(hyperbolic_u(), root_lattice(RootFamily::A, 1));
    const bool unimodular_change = determinant(base_change) == 1 || determinant(base_change) == -1;
    const bool built_matches = exact_eq(build_ns(spec_k3_s1()).lattice.gram, expected.gram);
    add("NS(S1) = U+A1 via base change", gram_str(expected.gram),
        unimodular_change && built_matches ? gram_str(transformed) : "mismatch");
  }
  {
    const EllipticSurfaceSpec s2 = spec_k3_s2();
    add("height <P,P>", "4", height_pairing(s2.sections[0], s2.sections[0], s2).str());
    add("height <Q,Q>", "4", height_pairing(s2.sections[1], s2.sections[1], s2).str());
    add("height <P,Q>", "2", height_pairing(s2.sections[0], s2.sections[1], s2).str());
    IMat expected(4, 4);
    expected << Int(0), Int(1), Int(0), Int(0),  //
        Int(1), Int(0), Int(0), Int(0),          //
        Int(0), Int(0), Int(-4), Int(-2),        //
        Int(0), Int(0), Int(-2), Int(-4);
    add("NS(S2) gram", gram_str(expected), gram_str(build_ns(s2).lattice.gram));
  }
  {
    const Lattice a2 = root_lattice(RootFamily::A, 2);
    const RootEmbedding no = embeds_root(a2, build_ns(spec_k3_s2()).lattice, 5, {2});
    std::string computed = "status=?";
    if (no.status == RootEmbedding::Status::No)
      computed = "No mod " + std::to_string(no.obstruction_modulus) + " after " +
                 std::to_string(no.residues_checked) + " residues";
    else if (no.status == RootEmbedding::Status::Yes)
      computed = "Yes";
    add("A2 embeds in NS(S2)", "No mod 2 after 256 residues", computed);

    const RootEmbedding yes = embeds_root(a2, build_ns(spec_k3_s1()).lattice, 3, {2});
    computed = "status=?";
    if (yes.status == RootEmbedding::Status::Yes) {
      bool verified = yes.witness.size() == 2;
      const Lattice& ns1 = build_ns(spec_k3_s1()).lattice;
      for (Eigen::Index i = 0; verified && i < 2; ++i)
        for (Eigen::Index j = 0; verified && j < 2; ++j)
          if (ns1.pair(yes.witness[static_cast<size_t>(i)], yes.witness[static_cast<size_t>(j)]) !=
              a2.gram(i, j))
            verified = false;
      computed = verified ? "Yes verified" : "Yes unverified";
    } else if (yes.status == RootEmbedding::Status::No) {
      computed = "No";
    }
    add("A2 embeds in NS(S1)", "Yes verified", computed);
  }

  // ---- Shioda-Tate instances
  add("r(rho=3, one I2)", "0", std::to_string(shioda_tate_rank(3, spec_k3_s1())));
  add("r(rho=4, no reducible fibres)", "2", std::to_string(shioda_tate_rank(4, spec_k3_s2())));

  // ---- fixed Newton-Okounkov polygons
  {
    const SurfaceModel p2 = model_p2();
    const NOBPolygon tri = polygon(p2, parse_divisor(p2, "L"), FlagSpec{"L", {}});
    add("NOB(p2: L, flag L)", "(0,0) (1,0) (0,1) area=1/2", poly_str(tri));
  }
  {
    const SurfaceModel f1 = model_f1();
    const RVec d = parse_divisor(f1, "3L - E");
    const NOBPolygon quad = polygon(f1, d, FlagSpec{"E", {}});
    add("NOB(f1: 3L-E, flag E)", "(0,0) (2,0) (2,3) (0,1) area=4", poly_str(quad));
    add("NOB area = (D.D)/2", (f1.pair(d, d) / Rational(2)).str(), quad.area.str());
    const NOBPolygon quad2 = polygon(f1, d, FlagSpec{"C", {{"E", 1}}});
    add("NOB(f1: 3L-E, flag C, p=C∩E)", "(0,0) (1,0) (3,2) (0,2) area=4", poly_str(quad2));
  }

  // ---- Zariski decompositions quoted in the construction
  {
    const SurfaceModel f1 = model_f1();
    add("Zariski(f1: L+2E)", "P=(1,0) N=2*E",
        zariski_str(zariski_decompose(f1, parse_divisor(f1, "L + 2E"))));
    add("mu(f1: 3L-E along E)", "2", mu_of(f1, parse_divisor(f1, "3L - E"), "E").str());
  }
  {
    const SurfaceModel s1 = model_k3_s1();
    const RVec d = parse_divisor(s1, "O + F");
    add("Zariski(k3_s1: O+F)", "P=(1/2,1/2,0) N=1/2*O", zariski_str(zariski_decompose(s1, d)));
    add("nu(k3_s1: O+F along O)", "1/2", nu_of(s1, d, "O").str());
  }

  return rows;
}

}  // namespace nok
