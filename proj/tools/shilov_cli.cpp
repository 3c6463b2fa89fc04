#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "shilov/domain.hpp"
#include "shilov/lie.hpp"
#include "shilov/models.hpp"
#include "shilov/suite.hpp"

namespace {

using namespace shilov;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitInput = 3;
constexpr int kExitIo = 4;

Json read_json_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open input file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw InputError(std::string("malformed JSON: ") + err.what());
  }
}

void emit(const Json& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::ios_base::failure("cannot open output file " + out_path);
  out << doc.dump(2) << "\n";
  if (!out) throw std::ios_base::failure("failed writing " + out_path);
}

// Deterministic standard tripotent: the a = 0 frame truncated at rank k.
Element standard_tripotent(const TripleSystem& sys, int k) {
  const auto sd = spectral_decompose(Element::zero(sys));
  Element acc = Element::zero(sys);
  for (int j = 0; j < k; ++j) acc = acc + sd.frame.member(j).element();
  return acc;
}

Json complex_to_json(cxd z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

cxd complex_from_json(const Json& j) {
  if (j.is_number()) return cxd(j.get<double>(), 0.0);
  return cxd(j.value("re", 0.0), j.value("im", 0.0));
}

Json cvec_to_json(const CVec& v) {
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

CVec cvec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re"))
    throw InputError("complex vectors need {\"re\": [...], \"im\": [...]}");
  const auto& re = j.at("re");
  CVec v(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    const double imv =
        j.contains("im") ? j.at("im").at(i).get<double>() : 0.0;
    v(static_cast<int>(i)) = cxd(re.at(i).get<double>(), imv);
  }
  return v;
}

Json factor_info(const FactorSpec& f) {
  Json j;
  const bool tube = f.kind == FactorSpec::Kind::CartanI && f.p == f.q;
  if (f.kind == FactorSpec::Kind::CartanI) {
    j["type"] = "I";
    j["p"] = f.p;
    j["q"] = f.q;
    j["shilov_crdim"] = (f.p - f.q) * f.q;
    j["shilov_codim"] = f.q * f.q;
  } else {
    j["type"] = "II";
    j["p"] = f.p;
    j["q"] = f.q;
    j["shilov_crdim"] = 2 * f.q;
    j["shilov_codim"] = f.q * (2 * f.q - 1);
  }
  j["rank"] = f.rank();
  j["dim"] = f.dim();
  j["tube"] = tube;
  return j;
}

int cmd_info(const std::string& spec, const std::string& out) {
  const TripleSystem sys = TripleSystem::parse(spec);
  Json j{{"system", sys.to_string()},
         {"rank", sys.rank()},
         {"dim", sys.dim()}};
  Json factors = Json::array();
  Json tube_flags = Json::array();
  int crdim = 0, codim = 0;
  for (const auto& f : sys.factors()) {
    Json fj = factor_info(f);
    crdim += fj["shilov_crdim"].get<int>();
    codim += fj["shilov_codim"].get<int>();
    tube_flags.push_back(fj["tube"]);
    factors.push_back(std::move(fj));
  }
  j["tube"] = tube_flags;
  j["shilov_crdim"] = crdim;
  j["shilov_codim"] = codim;
  j["factors"] = std::move(factors);
  emit(j, out);
  return kExitOk;
}

int cmd_compute(const std::string& verb, const std::string& spec,
                const std::string& in_path, const std::string& kind,
                const std::string& out) {
  const TripleSystem sys = TripleSystem::parse(spec);
  const Json input = read_json_input(in_path);
  Json result;

  if (verb == "tripotent") {
    const Element a = element_from_json(sys, input);
    const auto t = is_tripotent(a);
    result = Json{{"is_tripotent", t.ok}, {"residual", t.residual}};
  } else if (verb == "norm") {
    const Element a = element_from_json(sys, input);
    result = Json{{"spectral_norm", spectral_norm(a)},
                  {"frobenius_norm", a.norm()}};
  } else if (verb == "spectral") {
    const Element a = element_from_json(sys, input);
    const auto sd = spectral_decompose(a);
    Json lambdas = Json::array(), frame = Json::array();
    for (int j = 0; j < sd.lambdas.size(); ++j) lambdas.push_back(sd.lambdas(j));
    for (const auto& m : sd.frame.members())
      frame.push_back(element_to_json(m.element()));
    result = Json{{"lambdas", std::move(lambdas)},
                  {"rank", sd.frame.length()},
                  {"frame", std::move(frame)},
                  {"residual", sd.residual}};
  } else if (verb == "peirce") {
    const Element a = element_from_json(sys, input);
    const auto pd = peirce_decompose(Tripotent::certify(a));
    result = Json{{"dims", {pd.dims[0], pd.dims[1], pd.dims[2]}},
                  {"p1", operator_to_json(pd.p1)},
                  {"p12", operator_to_json(pd.p12)},
                  {"p0", operator_to_json(pd.p0)}};
  } else if (verb == "cayley") {
    const Element z = element_from_json(sys, input);
    const JordanContext ctx(
        Tripotent::certify(standard_tripotent(sys, sys.rank())));
    const SiegelPoint img = cayley(ctx, z);
    const auto cls = siegel_membership(ctx, img);
    result = Json{{"t", element_to_json(img.t)},
                  {"v", element_to_json(img.v)},
                  {"class", cls == SiegelClass::Interior ? "interior"
                            : cls == SiegelClass::OnN    ? "on_N"
                                                         : "outside"},
                  {"n_residual", siegel_n_residual(ctx, img)}};
  } else if (verb == "hull") {
    const Element z = element_from_json(sys, input);
    HullKind hk = HullKind::Rational;
    if (kind == "convex") hk = HullKind::Convex;
    else if (kind == "polynomial") hk = HullKind::Polynomial;
    else if (kind == "rational" || kind.empty()) hk = HullKind::Rational;
    else throw InputError("unknown hull kind '" + kind + "'");
    result = Json{{"kind", kind.empty() ? "rational" : kind},
                  {"member", hull_membership(z, hk)}};
  } else if (verb == "levi") {
    // Input: {"e": element?, "u": element, "v": element?}.
    const Element u = element_from_json(sys, input.at("u"));
    const Element v =
        input.contains("v") ? element_from_json(sys, input.at("v")) : u;
    const Element ee = input.contains("e")
                           ? element_from_json(sys, input.at("e"))
                           : standard_tripotent(sys, sys.rank());
    const Tripotent e = Tripotent::certify(ee);
    result = Json{{"phi", element_to_json(levi_phi(e, u, v))}};
  } else {
    throw InputError("unknown compute verb '" + verb + "'");
  }
  emit(result, out);
  return kExitOk;
}

int cmd_model(const std::string& which, const std::string& op,
              const std::string& in_path, const std::string& out) {
  const Json input = read_json_input(in_path);
  Json result;
  if (which == "sphere") {
    const CVec a = cvec_from_json(input.at("a"));
    const CVec z = cvec_from_json(input.at("z"));
    if (op == "symmetry" || op.empty())
      result = Json{{"result", cvec_to_json(sphere_symmetry(a, z))}};
    else
      throw InputError("sphere supports op=symmetry");
  } else if (which == "dual") {
    const cxd t = complex_from_json(input.at("t"));
    const CVec v = cvec_from_json(input.at("v"));
    if (op == "membership" || op.empty()) {
      result = Json{{"member", dual_sphere_membership(t, v)},
                    {"residual", dual_sphere_residual(t, v)}};
    } else if (op == "map") {
      const auto img = sphere_to_dual(t, v);
      result = Json{{"t", complex_to_json(img.t)}, {"v", cvec_to_json(img.v)},
                    {"residual", dual_sphere_residual(img.t, img.v)}};
    } else {
      throw InputError("dual supports op=membership|map");
    }
  } else if (which == "quadric") {
    const QuadricModel model = QuadricModel::heisenberg();
    if (op == "membership" || op.empty()) {
      const CVec z = cvec_from_json(input.at("z"));
      const CVec w = cvec_from_json(input.at("w"));
      const double r = model.membership_residual(z, w);
      result = Json{{"member", r <= kEqTol * rel_scale(w.norm())},
                    {"residual", r}};
    } else if (op == "symmetry") {
      const QuadricPoint a{cvec_from_json(input.at("a_z")),
                           cvec_from_json(input.at("a_w")), 0.0};
      const QuadricPoint p{cvec_from_json(input.at("z")),
                           cvec_from_json(input.at("w")), 0.0};
      const auto img = model.symmetry(a, p);
      result = Json{{"z", cvec_to_json(img.z)}, {"w", cvec_to_json(img.w)},
                    {"residual", img.residual}};
    } else if (op == "levi") {
      const auto rep = model.levi_check();
      result = Json{{"model_deviation", rep.model_deviation},
                    {"sphere_bracket_residual", rep.sphere_bracket_residual},
                    {"sphere_levi_residual", rep.sphere_levi_residual}};
    } else {
      throw InputError("quadric supports op=membership|symmetry|levi");
    }
  } else if (which == "heis3") {
    auto point = [&](const Json& j) {
      return Heis3Point{complex_from_json(j.at("z")), complex_from_json(j.at("w")),
                        complex_from_json(j.at("v"))};
    };
    auto emit_point = [](const Heis3Point& p) {
      return Json{{"z", complex_to_json(p.z)},
                  {"w", complex_to_json(p.w)},
                  {"v", complex_to_json(p.v)},
                  {"residual", heis3_residual(p)}};
    };
    if (op == "membership" || op.empty())
      result = Json{{"member", heis3_membership(point(input))},
                    {"residual", heis3_residual(point(input))}};
    else if (op == "product")
      result = emit_point(heis3_product(point(input.at("a")), point(input.at("x"))));
    else if (op == "symmetry")
      result = emit_point(heis3_symmetry(point(input)));
    else if (op == "dilation")
      result = emit_point(heis3_dilation(input.at("t").get<double>(), point(input)));
    else if (op == "sample")
      result = emit_point(heis3_sample(complex_from_json(input.at("z")),
                                       input.value("beta", 0.0),
                                       input.value("gamma", 0.0)));
    else
      throw InputError("heis3 supports op=membership|product|symmetry|dilation|sample");
  } else if (which == "syin5") {
    auto point = [&](const Json& j) {
      return Syin5Point{complex_from_json(j.at("z")), complex_from_json(j.at("w")),
                        complex_from_json(j.at("v1")), complex_from_json(j.at("v2")),
                        complex_from_json(j.at("u"))};
    };
    auto emit_point = [](const Syin5Point& p) {
      return Json{{"z", complex_to_json(p.z)},   {"w", complex_to_json(p.w)},
                  {"v1", complex_to_json(p.v1)}, {"v2", complex_to_json(p.v2)},
                  {"u", complex_to_json(p.u)},   {"residual", syin5_residual(p)}};
    };
    if (op == "membership" || op.empty())
      result = Json{{"member", syin5_membership(point(input))},
                    {"residual", syin5_residual(point(input))}};
    else if (op == "symmetry")
      result = emit_point(syin5_symmetry(point(input)));
    else if (op == "sample")
      result = emit_point(syin5_sample(complex_from_json(input.at("z")),
                                       input.value("beta", 0.0),
                                       complex_from_json(input.value("v2", Json::object())),
                                       input.value("gamma", 0.0)));
    else
      throw InputError("syin5 supports op=membership|symmetry|sample");
  } else {
    throw InputError("unknown model '" + which + "'");
  }
  emit(result, out);
  return kExitOk;
}

int cmd_lie(const std::string& what, const std::string& out) {
  CRAlgebraData data = [&]() {
    if (what.rfind("vorh:", 0) == 0) return build_vorh(std::stoi(what.substr(5)));
    if (what.rfind("tett:", 0) == 0) {
      const auto body = what.substr(5);
      const auto comma = body.find(',');
      if (comma == std::string::npos)
        throw InputError("expected tett:<n>,<d>");
      return build_tett(std::stoi(body.substr(0, comma)),
                        std::stoi(body.substr(comma + 1)));
    }
    if (what.rfind("su:", 0) == 0) {
      const auto body = what.substr(3);
      const auto comma = body.find(',');
      if (comma == std::string::npos) throw InputError("expected su:<p>,<q>");
      return build_su_sigma(std::stoi(body.substr(0, comma)),
                            std::stoi(body.substr(comma + 1)))
          .data;
    }
    throw InputError("expected vorh:<n> | tett:<n>,<d> | su:<p>,<q>");
  }();
  const LieReport rep = analyze(data);
  Json j{{"ambient", rep.ambient},
         {"dim_g", rep.dim_g},
         {"dim_h", rep.dim_h},
         {"cr_dim", rep.dim_h / 2},
         {"chain", rep.chain},
         {"kappa", rep.kappa},
         {"trr_codim", rep.trr_codim},
         {"minimal", rep.minimal},
         {"integrable", rep.integrable},
         {"residuals",
          {{"closure", rep.closure_residual},
           {"integrability", rep.integrability_residual},
           {"jacobi", rep.jacobi_residual}}}};
  emit(j, out);
  return kExitOk;
}

int cmd_suite(std::uint64_t seed, int samples, double tol,
              const std::vector<std::string>& filters, int threads,
              const std::string& out) {
  suite::SuiteConfig config;
  config.seed = seed;
  config.sample_override = samples;
  config.tol_override = tol;
  config.filters = filters;
  config.threads = threads;
  const auto report = suite::run_suite(config);
  emit(suite::report_to_json(report), out);
  return report.overall_pass ? kExitOk : kExitSuiteFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan triple systems, bounded symmetric domains and their "
               "symmetric CR model manifolds"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON report to a file");

  auto* info = app.add_subcommand("info", "describe a triple system");
  std::string info_spec;
  info->add_option("spec", info_spec, "system spec, e.g. I:3,2 or I:2,2xI:2,1")
      ->required();

  auto* compute = app.add_subcommand("compute", "run a single computation");
  std::string verb, comp_spec, in_path, kind;
  compute->add_option("verb", verb,
                      "tripotent|peirce|spectral|cayley|hull|levi|norm")
      ->required();
  compute->add_option("spec", comp_spec, "system spec")->required();
  compute->add_option("--in", in_path, "input JSON file ('-' for stdin)");
  compute->add_option("--kind", kind, "hull kind: convex|polynomial|rational");

  auto* model = app.add_subcommand("model", "symmetric CR model manifolds");
  std::string model_which, model_op, model_in;
  model->add_option("which", model_which, "sphere|dual|quadric|heis3|syin5")
      ->required();
  model->add_option("--op", model_op, "model operation");
  model->add_option("--in", model_in, "input JSON file ('-' for stdin)");

  auto* lie = app.add_subcommand("lie", "Lie-algebraic constructions");
  std::string lie_what;
  lie->add_subcommand("build", "build a named algebra")
      ->add_option("what", lie_what, "vorh:<n> | tett:<n>,<d> | su:<p>,<q>")
      ->required();

  auto* suite_cmd = app.add_subcommand("suite", "run the invariant suite");
  std::uint64_t seed = 42;
  int samples = 0, threads = 0;
  double tol = 0.0;
  std::vector<std::string> filters;
  bool json_flag = false;
  suite_cmd->add_option("--seed", seed, "root seed (default 42)");
  suite_cmd->add_option("--samples", samples, "override per-check sample count");
  suite_cmd->add_option("--tol", tol, "override per-check tolerance");
  suite_cmd->add_option("--filter", filters, "substring filters on check names");
  suite_cmd->add_option("--threads", threads,
                        "worker threads (1 = serial reference)");
  suite_cmd->add_flag("--json", json_flag, "emit JSON (always on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*info) return cmd_info(info_spec, out_path);
    if (*compute) return cmd_compute(verb, comp_spec, in_path, kind, out_path);
    if (*model) return cmd_model(model_which, model_op, model_in, out_path);
    if (*lie) return cmd_lie(lie_what, out_path);
    if (*suite_cmd)
      return cmd_suite(seed, samples, tol, filters, threads, out_path);
    std::cerr << "input error: no subcommand\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    // Domain, certification, frame, dimension and scope violations.
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
}
