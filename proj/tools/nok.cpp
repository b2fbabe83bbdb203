// nok: exact Newton-Okounkov polygons, Zariski decompositions, lattice and
// elliptic-surface computations from surface spec files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

#include "nok/builtin_models.hpp"
#include "nok/configmv.hpp"
#include "nok/emit.hpp"
#include "nok/search.hpp"
#include "nok/surface_io.hpp"
#include "nok/verify.hpp"

namespace {

using nok::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyMismatch = 3;

bool color_enabled() {
  if (const char* env = std::getenv("NOK_COLOR")) return std::string(env) != "0";
#if defined(__unix__) || defined(__APPLE__)
  return isatty(fileno(stdout)) != 0;
#else
  return false;
#endif
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

nok::SurfaceModel load_model_or_die(const std::string& path) {
  // builtin names are accepted in place of files
  for (const std::string& name : nok::builtin_model_names())
    if (path == name) return nok::builtin_model(name);
  nok::ParseResult parsed = nok::load_surface_file(path);
  if (!parsed.ok()) {
    std::ostringstream os;
    os << "surface file '" << path << "' is invalid:";
    for (const nok::Diagnostic& d : parsed.diagnostics)
      os << "\n  [" << d.where << "] " << d.message;
    throw nok::DomainError(os.str());
  }
  return *parsed.model;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nok::DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nok::DomainError("cannot write '" + path + "'");
  out << content;
}

// "A2", "E8", "U", sums like "U+A1+A1", or a lattice JSON file path
nok::Lattice lattice_from_arg(const std::string& arg) {
  if (arg.find(".json") != std::string::npos || arg.find('/') != std::string::npos)
    return nok::parse_lattice(read_file(arg));
  // also accept a surface spec name/file carrying an NS lattice
  for (const std::string& name : nok::builtin_model_names())
    if (arg == name) {
      nok::SurfaceModel m = nok::builtin_model(name);
      return nok::make_lattice("NS(" + name + ")", m.ns_gram, m.basis_labels);
    }
  nok::Lattice acc;
  bool first = true;
  size_t pos = 0;
  while (pos <= arg.size()) {
    size_t plus = arg.find('+', pos);
    if (plus == std::string::npos) plus = arg.size();
    const std::string tok = arg.substr(pos, plus - pos);
    nok::Lattice next;
    if (tok == "U") {
      next = nok::hyperbolic_u();
    } else if (tok.size() >= 2 && (tok[0] == 'A' || tok[0] == 'D' || tok[0] == 'E')) {
      const int n = std::stoi(tok.substr(1));
      const auto family = tok[0] == 'A'   ? nok::RootFamily::A
                          : tok[0] == 'D' ? nok::RootFamily::D
                                          : nok::RootFamily::E;
      next = nok::root_lattice(family, n);
    } else {
      throw nok::ContractError("cannot parse lattice term '" + tok + "'");
    }
    acc = first ? next : nok::direct_sum(acc, next);
    first = false;
    pos = plus + 1;
  }
  if (first) throw nok::ContractError("empty lattice expression");
  return acc;
}

nok::FlagSpec flag_from_args(const std::string& flag_label,
                             const std::vector<std::string>& points) {
  nok::FlagSpec flag;
  flag.curve = flag_label;
  for (const std::string& p : points) {
    if (p == "general") continue;
    if (p.rfind("at:", 0) != 0)
      throw nok::ContractError("--point expects 'general' or 'at:<label>[:mult]', got '" + p +
                               "'");
    const std::string rest = p.substr(3);
    const size_t colon = rest.find(':');
    const std::string label = rest.substr(0, colon == std::string::npos ? rest.size() : colon);
    int mult = 1;
    if (colon != std::string::npos) mult = std::stoi(rest.substr(colon + 1));
    flag.point_multiplicities[label] += mult;
  }
  return flag;
}

json vertices_json(const nok::NOBPolygon& poly) {
  json v = json::array();
  for (const auto& [t, s] : poly.vertices) v.push_back(json::array({t.str(), s.str()}));
  return v;
}

std::string describe_flag(const nok::FlagSpec& flag) {
  std::string s = flag.curve;
  if (flag.general()) return s + " (general point)";
  for (const auto& [label, m] : flag.point_multiplicities)
    s += " (" + label + ":" + std::to_string(m) + ")";
  return s;
}

int cmd_lattice_info(const std::string& spec, bool as_json) {
  const nok::Lattice l = lattice_from_arg(spec);
  const nok::Signature sig = nok::lattice_signature(l);
  const bool definite = sig.n_zero == 0 && (sig.n_plus == 0 || sig.n_minus == 0);
  std::vector<nok::IVec> roots;
  if (definite && sig.n_plus == 0) roots = nok::roots_of(l);
  if (as_json) {
    json j;
    j["name"] = l.name;
    j["rank"] = static_cast<int>(l.rank());
    j["discriminant"] = nok::discriminant(l).str();
    j["signature"] = json::array({sig.n_plus, sig.n_minus, sig.n_zero});
    j["even"] = nok::is_even(l);
    if (definite && sig.n_plus == 0) j["root_count"] = roots.size();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "lattice " << l.name << "\n";
  std::cout << "  rank         " << l.rank() << "\n";
  std::cout << "  gram\n";
  for (Eigen::Index i = 0; i < l.rank(); ++i) {
    std::cout << "    ";
    for (Eigen::Index j = 0; j < l.rank(); ++j) std::cout << l.gram(i, j) << (j + 1 < l.rank() ? " " : "");
    std::cout << "\n";
  }
  std::cout << "  labels       ";
  for (size_t i = 0; i < l.labels.size(); ++i) std::cout << (i ? " " : "") << l.labels[i];
  std::cout << "\n";
  std::cout << "  discriminant " << nok::discriminant(l) << "\n";
  std::cout << "  signature    (" << sig.n_plus << "," << sig.n_minus << "," << sig.n_zero << ")\n";
  std::cout << "  parity       " << (nok::is_even(l) ? "even" : "odd") << "\n";
  if (definite && sig.n_plus == 0) std::cout << "  roots        " << roots.size() << "\n";
  return kExitOk;
}

int cmd_lattice_embed(const std::string& source_arg, const std::string& target_arg, int bound,
                      const std::string& mods, bool as_json) {
  const nok::Lattice source = lattice_from_arg(source_arg);
  const nok::Lattice target = lattice_from_arg(target_arg);
  std::vector<int> moduli;
  std::stringstream ss(mods);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) moduli.push_back(std::stoi(tok));
  const nok::RootEmbedding verdict = nok::embeds_root(source, target, bound, moduli);

  if (as_json) {
    json j;
    j["source"] = source.name;
    j["target"] = target.name;
    switch (verdict.status) {
      case nok::RootEmbedding::Status::Yes: {
        j["status"] = "yes";
        json w = json::array();
        for (const nok::IVec& v : verdict.witness) {
          json row = json::array();
          for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i).str());
          w.push_back(row);
        }
        j["witness"] = w;
        break;
      }
      case nok::RootEmbedding::Status::No:
        j["status"] = "no";
        j["obstruction_modulus"] = verdict.obstruction_modulus;
        j["residues_checked"] = verdict.residues_checked;
        break;
      case nok::RootEmbedding::Status::Unknown:
        j["status"] = "unknown";
        j["search_bound"] = verdict.search_bound;
        break;
    }
    if (!verdict.note.empty()) j["note"] = verdict.note;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << source.name << " -> " << target.name << ": ";
  switch (verdict.status) {
    case nok::RootEmbedding::Status::Yes:
      std::cout << paint("embeds", "32") << "\n";
      for (size_t k = 0; k < verdict.witness.size(); ++k) {
        std::cout << "  v" << k + 1 << " =";
        const nok::IVec& v = verdict.witness[k];
        for (Eigen::Index i = 0; i < v.size(); ++i) {
          if (v(i) == 0) continue;
          std::cout << " " << (v(i) > 0 ? "+" : "") << v(i) << "·" << target.labels[static_cast<size_t>(i)];
        }
        std::cout << "\n";
      }
      break;
    case nok::RootEmbedding::Status::No:
      std::cout << paint("does not embed", "31") << " (no solution mod "
                << verdict.obstruction_modulus << "; " << verdict.residues_checked
                << " residue assignments exhausted)\n";
      break;
    case nok::RootEmbedding::Status::Unknown:
      std::cout << "unknown (searched coordinate box ±" << verdict.search_bound << ")\n";
      break;
  }
  if (!verdict.note.empty()) std::cout << "  note: " << verdict.note << "\n";
  return kExitOk;
}

int cmd_ellsurf_build(const std::string& path, bool as_json) {
  const nok::EllipticSurfaceSpec spec = nok::parse_elliptic_spec(read_file(path));
  const nok::NSModel ns = nok::build_ns(spec);
  if (as_json) {
    std::cout << nok::serialize_ns_model(ns);
    return kExitOk;
  }
  std::cout << "NS lattice: " << ns.lattice.name << " (rank " << ns.lattice.rank() << ")\n";
  const nok::Signature sig = nok::lattice_signature(ns.lattice);
  std::cout << "  signature (" << sig.n_plus << "," << sig.n_minus << "," << sig.n_zero << ")"
            << ", discriminant " << nok::discriminant(ns.lattice) << "\n";
  std::cout << "  basis:";
  for (const std::string& l : ns.lattice.labels) std::cout << " " << l;
  std::cout << "\n  distinguished classes:\n";
  for (const auto& [label, cls] : ns.distinguished) {
    std::cout << "    " << label << " = (";
    for (Eigen::Index i = 0; i < cls.size(); ++i) std::cout << (i ? "," : "") << cls(i);
    std::cout << ")\n";
  }
  std::cout << "  r = " << nok::shioda_tate_rank(static_cast<int>(ns.lattice.rank()), spec)
            << ", rk(Triv) = " << nok::trivial_lattice_rank(spec) << "\n";
  return kExitOk;
}

int cmd_mv(const std::string& path, bool as_json) {
  const nok::SurfaceModel model = load_model_or_die(path);
  std::vector<nok::CurveRecord> negatives;
  for (int i : model.negative_curve_indices())
    negatives.push_back(model.curves[static_cast<size_t>(i)]);
  const nok::MvReport report = nok::mv_surface(model.rho, negatives, model.ns_gram);
  const nok::PicardConstraint constraint =
      nok::classify_picard(report.mv_value, !negatives.empty());

  if (as_json) {
    json j;
    j["model"] = model.name;
    j["mv"] = report.mv_value;
    j["certified"] = report.certified;
    j["upper_bound_used"] = report.upper_bound_used;
    j["witness"] = report.witness_labels;
    j["note"] = report.note;
    j["picard_constraint"] = constraint.describe();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "mv = " << report.mv_value << (report.certified ? " (certified)" : " (lower bound)")
            << "\n";
  std::cout << "  witness config: {";
  for (size_t i = 0; i < report.witness_labels.size(); ++i)
    std::cout << (i ? ", " : "") << report.witness_labels[i];
  std::cout << "}  k=" << report.witness.k() << " mc=" << nok::mc_of(report.witness) << "\n";
  std::cout << "  bound used: " << report.upper_bound_used << "  (" << report.note << ")\n";
  std::cout << "  picard: " << constraint.describe() << "\n";
  return kExitOk;
}

int cmd_zariski(const std::string& path, const std::string& dexpr, bool as_json) {
  const nok::SurfaceModel model = load_model_or_die(path);
  const nok::DivisorClass d = nok::parse_divisor_class(model, dexpr);
  const nok::ZariskiDecomposition z = nok::zariski_decompose(model, d.coords);
  if (as_json) {
    json j;
    j["model"] = model.name;
    j["divisor"] = d.label;
    json p = json::array();
    for (Eigen::Index i = 0; i < z.positive.size(); ++i) p.push_back(z.positive(i).str());
    j["positive"] = p;
    j["negative"] = json::object();
    for (const auto& [label, a] : z.negative_coeffs) j["negative"][label] = a.str();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "P =";
  for (Eigen::Index i = 0; i < z.positive.size(); ++i) {
    if (z.positive(i).is_zero()) continue;
    std::cout << " " << (z.positive(i).sign() > 0 ? "+" : "") << z.positive(i).str() << "·"
              << model.basis_labels[static_cast<size_t>(i)];
  }
  if (nok::is_zero(z.positive)) std::cout << " 0";
  std::cout << "\nN =";
  if (z.negative_coeffs.empty()) std::cout << " 0";
  for (const auto& [label, a] : z.negative_coeffs) std::cout << " +" << a.str() << "·" << label;
  std::cout << "\n";
  return kExitOk;
}

int cmd_nu_mu(const std::string& path, const std::string& dexpr, const std::string& curve,
              bool want_mu, bool as_json) {
  const nok::SurfaceModel model = load_model_or_die(path);
  const nok::DivisorClass d = nok::parse_divisor_class(model, dexpr);
  const Rational v = want_mu ? nok::mu_of(model, d.coords, curve) : nok::nu_of(model, d.coords, curve);
  if (as_json) {
    json j;
    j[want_mu ? "mu" : "nu"] = v.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (want_mu ? "mu" : "nu") << " = " << v.str() << "\n";
  }
  return kExitOk;
}

int cmd_nob(const std::string& path, const std::string& dexpr, const std::string& flag_label,
            const std::vector<std::string>& points, const std::string& svg_path,
            const std::string& csv_path, bool as_json) {
  const nok::SurfaceModel model = load_model_or_die(path);
  const nok::DivisorClass d = nok::parse_divisor_class(model, dexpr);
  const nok::FlagSpec flag = flag_from_args(flag_label, points);
  const nok::NOBPolygon poly = nok::polygon(model, d.coords, flag);

  if (!svg_path.empty()) write_file(svg_path, nok::polygon_svg(poly));
  if (!csv_path.empty()) write_file(csv_path, nok::polygon_csv(poly));

  if (as_json) {
    json j;
    j["model"] = model.name;
    j["divisor"] = dexpr;
    j["flag"] = describe_flag(flag);
    j["nu"] = poly.nu.str();
    j["mu"] = poly.mu.str();
    j["vertices"] = vertices_json(poly);
    j["vertex_count"] = nok::count_vertices(poly);
    j["area"] = poly.area.str();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "flag: " << describe_flag(flag) << "\n";
  std::cout << "t range: [" << poly.nu.str() << ", " << poly.mu.str() << "]\n";
  std::cout << "vertices (" << nok::count_vertices(poly) << "):";
  for (const auto& [t, s] : poly.vertices) std::cout << " (" << t.str() << "," << s.str() << ")";
  std::cout << "\narea = " << poly.area.str() << "\n";
  return kExitOk;
}

int cmd_search(const std::string& path, int target, int cmin, int cmax, bool as_json) {
  const nok::SurfaceModel model = load_model_or_die(path);
  const nok::SearchResult res = nok::search_vertices(model, target, cmin, cmax);
  if (as_json) {
    json j;
    j["model"] = model.name;
    j["target"] = target;
    j["found"] = res.found;
    j["examined"] = res.examined;
    if (res.found) {
      json dv = json::array();
      for (Eigen::Index i = 0; i < res.divisor.size(); ++i) dv.push_back(res.divisor(i).str());
      j["divisor"] = dv;
      j["flag"] = describe_flag(res.flag);
      j["vertices"] = vertices_json(res.poly);
      j["area"] = res.poly.area.str();
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (!res.found) {
    std::cout << "no polygon with exactly " << target << " vertices in the grid ("
              << res.examined << " candidates examined)\n";
    return kExitOk;
  }
  std::cout << "found after " << res.examined << " candidates:\n";
  std::cout << "  D =";
  for (Eigen::Index i = 0; i < res.divisor.size(); ++i) {
    if (res.divisor(i).is_zero()) continue;
    std::cout << " " << (res.divisor(i).sign() > 0 ? "+" : "") << res.divisor(i).str() << "·"
              << model.basis_labels[static_cast<size_t>(i)];
  }
  std::cout << "\n  flag: " << describe_flag(res.flag) << "\n";
  std::cout << "  vertices:";
  for (const auto& [t, s] : res.poly.vertices)
    std::cout << " (" << t.str() << "," << s.str() << ")";
  std::cout << "\n  area = " << res.poly.area.str() << "\n";
  return kExitOk;
}

int cmd_verify_paper(bool as_json) {
  const std::vector<nok::VerifyRow> rows = nok::verify_paper_rows();
  bool all_pass = true;
  if (as_json) {
    json j = json::array();
    for (const nok::VerifyRow& r : rows) {
      json row;
      row["name"] = r.name;
      row["expected"] = r.expected;
      row["computed"] = r.computed;
      row["pass"] = r.pass;
      j.push_back(row);
      all_pass = all_pass && r.pass;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    size_t width = 0;
    for (const nok::VerifyRow& r : rows) width = std::max(width, r.name.size());
    for (const nok::VerifyRow& r : rows) {
      all_pass = all_pass && r.pass;
      std::cout << (r.pass ? paint("PASS", "32") : paint("FAIL", "31")) << "  " << r.name
                << std::string(width - r.name.size() + 2, ' ');
      if (r.pass)
        std::cout << r.computed << "\n";
      else
        std::cout << "expected [" << r.expected << "] got [" << r.computed << "]\n";
    }
    std::cout << (all_pass ? "all rows pass" : "MISMATCHES PRESENT") << " (" << rows.size()
              << " rows)\n";
  }
  return all_pass ? kExitOk : kExitVerifyMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Newton-Okounkov polygons and lattice computations on surface models"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // lattice info | embed
  CLI::App* lattice = app.add_subcommand("lattice", "integral lattice utilities");
  lattice->require_subcommand(1);
  lattice->fallthrough();
  CLI::App* linfo = lattice->add_subcommand("info", "rank, gram, discriminant, signature, roots");
  std::string lattice_spec;
  linfo->add_option("lattice", lattice_spec, "U, A2, E8, sums like U+A1, or a JSON file")
      ->required();
  CLI::App* lembed = lattice->add_subcommand("embed", "decide root-lattice embedding");
  std::string embed_source = "A2", embed_target;
  int embed_bound = 6;
  std::string embed_mods = "2,3,4";
  lembed->add_option("--source", embed_source, "source root lattice (default A2)");
  lembed->add_option("target", embed_target, "target lattice")->required();
  lembed->add_option("--bound", embed_bound, "coordinate box bound for the witness search");
  lembed->add_option("--mod", embed_mods, "comma-separated moduli for obstruction checks");

  // ellsurf build
  CLI::App* ellsurf = app.add_subcommand("ellsurf", "elliptic surface constructions");
  ellsurf->require_subcommand(1);
  CLI::App* ebuild = ellsurf->add_subcommand("build", "NS lattice from fibration data");
  std::string espec;
  ebuild->add_option("spec", espec, "elliptic spec JSON file")->required();

  auto add_model_arg = [](CLI::App* cmd, std::string& var) {
    cmd->add_option("surface", var, "surface spec file or builtin name")->required();
  };

  CLI::App* mv = app.add_subcommand("mv", "maximal vertex count over the curve list");
  std::string mv_path;
  add_model_arg(mv, mv_path);

  CLI::App* zariski = app.add_subcommand("zariski", "Zariski decomposition of a divisor");
  std::string z_path, z_d;
  add_model_arg(zariski, z_path);
  zariski->add_option("-D", z_d, "divisor expression, e.g. \"3L - E\"")->required();

  CLI::App* nu = app.add_subcommand("nu", "coefficient of a curve in the negative part");
  std::string nu_path, nu_d, nu_curve;
  add_model_arg(nu, nu_path);
  nu->add_option("-D", nu_d, "divisor expression")->required();
  nu->add_option("--flag,--curve", nu_curve, "curve label")->required();

  CLI::App* mu = app.add_subcommand("mu", "largest t with D - tC pseudo-effective");
  std::string mu_path, mu_d, mu_curve;
  add_model_arg(mu, mu_path);
  mu->add_option("-D", mu_d, "divisor expression")->required();
  mu->add_option("--flag,--curve", mu_curve, "curve label")->required();

  CLI::App* nob = app.add_subcommand("nob", "Newton-Okounkov polygon for a flag");
  std::string nob_path, nob_d, nob_flag, nob_svg, nob_csv;
  std::vector<std::string> nob_points;
  add_model_arg(nob, nob_path);
  nob->add_option("-D", nob_d, "divisor expression")->required();
  nob->add_option("--flag", nob_flag, "flag curve label")->required();
  nob->add_option("--point", nob_points,
                  "general (default) or at:<label>[:mult], repeatable");
  nob->add_option("--svg", nob_svg, "write an SVG drawing here");
  nob->add_option("--csv", nob_csv, "write vertices as CSV here");

  CLI::App* search = app.add_subcommand("search", "find a polygon with a given vertex count");
  std::string s_path;
  int s_target = 0, s_cmin = -3, s_cmax = 6;
  add_model_arg(search, s_path);
  search->add_option("--target", s_target, "desired vertex count")->required();
  search->add_option("--coeff-min", s_cmin, "divisor grid lower bound");
  search->add_option("--coeff-max", s_cmax, "divisor grid upper bound");

  CLI::App* verify = app.add_subcommand("verify-paper", "golden harness over the bundled models");

  // let --json (and friends) appear after a subcommand's own arguments
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) {
    sc->fallthrough();
    for (CLI::App* sub : sc->get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (linfo->parsed()) return cmd_lattice_info(lattice_spec, as_json);
    if (lembed->parsed())
      return cmd_lattice_embed(embed_source, embed_target, embed_bound, embed_mods, as_json);
    if (ebuild->parsed()) return cmd_ellsurf_build(espec, as_json);
    if (mv->parsed()) return cmd_mv(mv_path, as_json);
    if (zariski->parsed()) return cmd_zariski(z_path, z_d, as_json);
    if (nu->parsed()) return cmd_nu_mu(nu_path, nu_d, nu_curve, false, as_json);
    if (mu->parsed()) return cmd_nu_mu(mu_path, mu_d, mu_curve, true, as_json);
    if (nob->parsed())
      return cmd_nob(nob_path, nob_d, nob_flag, nob_points, nob_svg, nob_csv, as_json);
    if (search->parsed()) return cmd_search(s_path, s_target, s_cmin, s_cmax, as_json);
    if (verify->parsed()) return cmd_verify_paper(as_json);
  } catch (const nok::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
