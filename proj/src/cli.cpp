#include "superdirac/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "superdirac/cache.hpp"
#include "superdirac/verify.hpp"

namespace superdirac {

namespace {

constexpr int kOk = 0, kIdentityFailure = 1, kUsage = 2;

struct CommonOpts {
  bool json = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string kind_flag_name(RootKind k) {
  switch (k) {
    case RootKind::B:
      return "b";
    case RootKind::C:
      return "c";
    case RootKind::OSP:
      return "osp";
  }
  return "?";
}

RootKind parse_kind(const std::string& s, bool allow_osp) {
  if (s == "b" || s == "B") return RootKind::B;
  if (s == "c" || s == "C") return RootKind::C;
  if (allow_osp && (s == "osp" || s == "OSP")) return RootKind::OSP;
  throw CLI::ValidationError("--type",
                             "expected " +
                                 std::string(allow_osp ? "b, c or osp" : "b or c"));
}

int cmd_roots(const std::string& type, std::size_t n, bool json,
              std::ostream& out) {
  RootKind kind = parse_kind(type, true);
  auto data = positive_roots(kind, n);
  if (json) {
    Json even = Json::array(), odd = Json::array();
    for (const auto& r : data.even_positive_roots) even.push_back(r.str());
    for (const auto& r : data.odd_positive_roots) odd.push_back(r.str());
    emit(out, Json{{"kind", kind_flag_name(kind)},
                   {"n", n},
                   {"even_positive_roots", even},
                   {"odd_positive_roots", odd},
                   {"rho", rho(kind, n).str()}});
    return kOk;
  }
  out << "positive roots of " << kind_name(kind) << "_" << n << ":\n";
  out << "  even:";
  for (const auto& r : data.even_positive_roots) out << "  (" << r.str() << ")";
  out << "\n";
  if (!data.odd_positive_roots.empty()) {
    out << "  odd: ";
    for (const auto& r : data.odd_positive_roots) out << "  (" << r.str() << ")";
    out << "\n";
  }
  out << "  rho = (" << rho(kind, n).str() << ")\n";
  return kOk;
}

int cmd_character(const std::string& type, const std::string& hw_text,
                  bool json, const ResultCache& cache, std::ostream& out) {
  RootKind kind = parse_kind(type, true);
  if (kind == RootKind::C)
    throw CLI::ValidationError("--type", "character command supports b and osp");
  HighestWeight hw(parse_weight(hw_text));
  std::string key = "character|" + kind_flag_name(kind) + "|" +
                    std::to_string(hw.rank()) + "|" + hw.lambda().str();
  std::string payload;
  if (auto hit = cache.get(key)) {
    payload = *hit;
  } else {
    auto rec = kind == RootKind::B ? character_B(hw) : character_osp(hw);
    payload = record_json(rec).dump(2);
    cache.put(key, payload);
  }
  if (json) {
    out << payload << "\n";
    return kOk;
  }
  Json rec = Json::parse(payload);
  out << "irreducible " << (kind == RootKind::B ? "o(2n+1)" : "osp(1|2n)")
      << " character, highest weight ("
      << weight_from_json(rec["highest_weight"]).str() << ")\n";
  out << "  dimension: " << rec["dimension"].get<std::string>() << "\n";
  out << "  infinitesimal character: ("
      << weight_from_json(rec["inf_char"]).str() << ")\n";
  out << "  weights (canonical order):\n";
  std::size_t rank = hw.rank();
  for (const auto& t : rec["terms"]) {
    std::vector<Int> d;
    for (const auto& v : t["2exp"]) d.emplace_back(v.get<long>());
    out << "    (" << Weight(d).str() << ") x "
        << t["coef"].get<std::string>() << "\n";
  }
  (void)rank;
  return kOk;
}

int cmd_mult(const std::string& hw_text, const std::string& weight_text,
             bool json, std::ostream& out) {
  HighestWeight hw(parse_weight(hw_text));
  auto mult = freudenthal_multiplicities(hw);
  if (!weight_text.empty()) {
    Weight mu = parse_weight(weight_text);
    Int m = 0;
    if (auto it = mult.find(mu); it != mult.end()) m = it->second;
    if (json)
      emit(out, Json{{"highest_weight", hw.lambda().str()},
                     {"weight", mu.str()},
                     {"mult", m.get_str()}});
    else
      out << "multiplicity of (" << mu.str() << ") in V(" << hw.lambda().str()
          << ") = " << m.get_str() << "\n";
    return kOk;
  }
  if (json) {
    emit(out, Json{{"highest_weight", hw.lambda().str()},
                   {"multiplicities", multiplicities_json(mult)}});
    return kOk;
  }
  out << "weight multiplicities of V(" << hw.lambda().str() << "):\n";
  for (const auto& [mu, m] : mult)
    out << "  (" << mu.str() << ") x " << m.get_str() << "\n";
  return kOk;
}

int cmd_dim(const std::string& type, const std::string& hw_text, bool json,
            std::ostream& out) {
  RootKind kind = parse_kind(type, false);
  HighestWeight hw(parse_weight(hw_text));
  Int d = weyl_dimension(hw, kind);
  if (json)
    emit(out, Json{{"kind", kind_flag_name(kind)},
                   {"highest_weight", hw.lambda().str()},
                   {"dimension", d.get_str()}});
  else
    out << "dim V(" << hw.lambda().str() << ") over " << kind_name(kind)
        << "_" << hw.rank() << " = " << d.get_str() << "\n";
  return kOk;
}

int cmd_transfer_factor(std::size_t n, long order, bool json,
                        std::ostream& out) {
  auto cert = transfer_factor_identity(n, order);
  if (json)
    emit(out, transfer_factor_certificate_json(cert));
  else {
    out << "transfer factor Phi = ch M+ - ch M- at n=" << n
        << ", order " << order << "\n";
    out << "  Phi = " << weil_character(n, WeilParity::Difference, order).str()
        << "\n";
    out << "  (ch M+ - ch M-) * D1 == 1: "
        << (cert.product_is_one ? "pass" : "FAIL") << "\n";
    out << "  expand(D_B / D_C) == ch M+ - ch M-: "
        << (cert.matches_ratio ? "pass" : "FAIL") << "\n";
  }
  return cert.passed() ? kOk : kIdentityFailure;
}

int cmd_dirac_index(std::size_t n, const std::string& hw_text, long order,
                    bool json, std::ostream& out) {
  DiracIndexCertificate cert =
      hw_text.empty()
          ? dirac_index_trivial(n, order)
          : dirac_index_character(HighestWeight(parse_weight(hw_text)), order);
  if (json)
    emit(out, dirac_index_certificate_json(cert));
  else {
    out << "symplectic Dirac index certificate at order " << order << "\n";
    out << "  module: "
        << (cert.highest_weight
                ? "V(" + cert.highest_weight->lambda().str() + ")"
                : std::string("trivial"))
        << "\n";
    out << "  ch V * (ch M+ - ch M-) == expand(N/D_C): "
        << (cert.verdict ? "pass" : "FAIL") << "\n";
  }
  return cert.verdict ? kOk : kIdentityFailure;
}

int cmd_lift(const std::string& param, const std::string& direction, bool json,
             std::ostream& out) {
  VirtualCharacter theta{classify(parse_weight(param)), {}};
  theta.coeffs.emplace(WeylElement::identity(theta.lambda_dom.rank()), Rat(1));
  LiftDirection dir;
  if (direction == "forward")
    dir = LiftDirection::Forward;
  else if (direction == "inverse")
    dir = LiftDirection::Inverse;
  else
    throw CLI::ValidationError("--direction", "expected forward or inverse");
  auto lifted = lift_gamma(theta, dir);
  if (json)
    emit(out, Json{{"input", parameter_json(theta.lambda_dom)},
                   {"direction", direction},
                   {"output", parameter_json(lifted.lambda_dom)}});
  else
    out << "Gamma" << (dir == LiftDirection::Inverse ? "^-1" : "") << ": ("
        << theta.lambda_dom.lambda.str() << ") -> ("
        << lifted.lambda_dom.lambda.str() << ")\n";
  return kOk;
}

int cmd_lift_ds(const std::string& param, bool json, std::ostream& out) {
  auto p = classify(parse_weight(param));
  auto lifted = lift_ds_parameter(p);
  if (json)
    emit(out, Json{{"lambda", p.lambda.str()},
                   {"lambda_prime", lifted.lambda.str()}});
  else
    out << "discrete series parameter (" << p.lambda.str()
        << ") of Sp lifts to (" << lifted.lambda.str() << ") of Mp\n";
  return kOk;
}

int cmd_dirac_square(std::size_t n, const std::string& convention, bool json,
                     std::ostream& out) {
  SuperAlgebraStructure g(n, 2);
  TensorSignConvention conv;
  if (convention == "ungraded")
    conv = TensorSignConvention::Ungraded;
  else if (convention == "koszul")
    conv = TensorSignConvention::Koszul;
  else
    throw CLI::ValidationError("--convention", "expected ungraded or koszul");
  TensorAlgebra alg(g, conv);
  auto cert = verify_dirac_square(alg);
  if (json)
    emit(out, dirac_square_certificate_json(cert));
  else {
    out << "D^2 + Omega_g - Omega_{g0,Delta} + C at n=" << n << " ("
        << convention << " product): "
        << (cert.residual_terms == 0 ? "0" :
            std::to_string(cert.residual_terms) + " residual terms")
        << "\n";
    out << "  C = " << cert.constant.get_str() << "\n";
    out << "  g0-invariance residuals: " << cert.invariance_residuals << "\n";
    out << "  basis independence: "
        << (cert.basis_independent ? "pass" : "FAIL") << "\n";
  }
  return cert.pass() ? kOk : kIdentityFailure;
}

int cmd_dirac_cohomology(long m, long order, bool json, std::ostream& out) {
  SuperAlgebraStructure g(1);
  TensorAlgebra alg(g);
  auto mod = build_module(alg, m);
  auto res = dirac_cohomology(alg, mod, order);
  if (json)
    emit(out, cohomology_json(res));
  else {
    out << "Dirac cohomology of V(" << m << ") (x) M at order " << order
        << " (reliable weights only):\n";
    out << "  H+:";
    for (const auto& [mu, c] : res.hplus)
      out << "  (" << mu.str() << ") x " << c.get_str();
    out << "\n  H-:";
    for (const auto& [mu, c] : res.hminus)
      out << "  (" << mu.str() << ") x " << c.get_str();
    out << "\n  Euler characteristic == ch V * (ch M+ - ch M-): "
        << (res.euler_matches ? "pass" : "FAIL") << "\n";
    out << "  Omega_{g0,Delta} on Ker D = chi + C = "
        << res.casimir_scalar.get_str() << ": "
        << (res.casimir_scalar_ok ? "pass" : "FAIL") << "\n";
  }
  return res.euler_matches && res.casimir_scalar_ok ? kOk : kIdentityFailure;
}

int cmd_verify(const std::string& suite, const VerifyLimits& limits, bool json,
               std::ostream& out) {
  if (!is_verify_suite(suite))
    throw CLI::ValidationError("--suite", "unknown suite " + suite);
  auto results = run_verify(suite, limits);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (json) {
    emit(out, verify_report_json(results, limits));
  } else {
    for (const auto& r : results)
      out << (r.pass ? "pass" : "FAIL") << "  [" << r.suite << "] "
          << r.identity << (r.detail.empty() ? "" : "  -- " + r.detail)
          << "\n";
    out << (all ? "all identities verified" : "verification FAILED") << "\n";
  }
  return all ? kOk : kIdentityFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "superdirac: exact characters, symplectic Dirac identities and "
      "metaplectic character lifting for osp(1|2n)"};
  app.require_subcommand(1);

  std::string type = "b", hw, weight_text, param, direction = "forward";
  std::string convention = "ungraded", suite = "all";
  std::size_t n = 1;
  long order = 12, mvalue = 0;
  bool json = false, no_cache = false;
  std::string cache_dir = ".superdirac-cache";
  VerifyLimits limits;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "machine-readable output");
  };

  auto* roots = app.add_subcommand("roots", "positive roots and rho");
  roots->add_option("--type", type, "b, c or osp")->required();
  roots->add_option("--n", n, "rank")->required();
  add_json(roots);

  auto* character =
      app.add_subcommand("character", "irreducible character record");
  character->add_option("--type", type, "b or osp")->required();
  character->add_option("--n", n, "rank")->required();
  character->add_option("--hw", hw, "highest weight, e.g. 2,1")->required();
  character->add_option("--cache-dir", cache_dir, "result cache directory");
  character->add_flag("--no-cache", no_cache, "disable the result cache");
  add_json(character);

  auto* mult = app.add_subcommand("mult", "Freudenthal weight multiplicities");
  mult->add_option("--n", n, "rank")->required();
  mult->add_option("--hw", hw, "highest weight")->required();
  mult->add_option("--weight", weight_text, "report a single weight");
  add_json(mult);

  auto* dim = app.add_subcommand("dim", "Weyl dimension");
  dim->add_option("--type", type, "b or c")->required();
  dim->add_option("--n", n, "rank")->required();
  dim->add_option("--hw", hw, "highest weight")->required();
  add_json(dim);

  auto* transfer =
      app.add_subcommand("transfer-factor", "oscillator transfer factor");
  transfer->add_option("--n", n, "rank")->required();
  transfer->add_option("--order", order, "series truncation order");
  add_json(transfer);

  auto* index = app.add_subcommand("dirac-index", "Dirac index certificate");
  index->add_option("--n", n, "rank")->required();
  index->add_option("--hw", hw, "highest weight (omit for trivial module)");
  index->add_option("--order", order, "series truncation order");
  add_json(index);

  auto* lift = app.add_subcommand("lift", "character lifting Gamma");
  lift->add_option("--n", n, "rank");
  lift->add_option("--param", param, "dominant parameter")->required();
  lift->add_option("--direction", direction, "forward or inverse");
  add_json(lift);

  auto* lift_ds =
      app.add_subcommand("lift-ds", "discrete series parameter lift");
  lift_ds->add_option("--n", n, "rank");
  lift_ds->add_option("--param", param, "integral regular parameter")
      ->required();
  add_json(lift_ds);

  auto* dsq = app.add_subcommand("dirac-square", "verify the D^2 identity");
  dsq->add_option("--n", n, "rank (1 or 2)")->required();
  dsq->add_option("--convention", convention, "ungraded or koszul");
  add_json(dsq);

  auto* coh = app.add_subcommand("dirac-cohomology",
                                 "exact Dirac cohomology of V(m) (x) M");
  coh->add_option("--m", mvalue, "highest weight m of the osp(1|2) module")
      ->required();
  coh->add_option("--order", order, "truncation order");
  add_json(coh);

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", suite, "all or a suite name");
  verify->add_option("--n-max", limits.n_max, "rank ceiling");
  verify->add_option("--order", limits.order, "series truncation order");
  verify->add_option("--jobs", limits.jobs, "worker threads");
  add_json(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: run with --help for the full flag list\n";
    return kUsage;
  }

  try {
    if (roots->parsed()) return cmd_roots(type, n, json, out);
    if (character->parsed()) {
      ResultCache cache(cache_dir, !no_cache);
      return cmd_character(type, hw, json, cache, out);
    }
    if (mult->parsed()) return cmd_mult(hw, weight_text, json, out);
    if (dim->parsed()) return cmd_dim(type, hw, json, out);
    if (transfer->parsed()) return cmd_transfer_factor(n, order, json, out);
    if (index->parsed()) return cmd_dirac_index(n, hw, order, json, out);
    if (lift->parsed()) return cmd_lift(param, direction, json, out);
    if (lift_ds->parsed()) return cmd_lift_ds(param, json, out);
    if (dsq->parsed()) return cmd_dirac_square(n, convention, json, out);
    if (coh->parsed()) return cmd_dirac_cohomology(mvalue, order, json, out);
    if (verify->parsed()) return cmd_verify(suite, limits, json, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: run the subcommand with --help\n";
    return kUsage;
  } catch (const RankError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: lower --n or --n-max\n";
    return kUsage;
  } catch (const RegularityError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: parameters must have nonzero, pairwise distinct "
           "absolute coordinates\n";
    return kUsage;
  } catch (const ParityError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: Sp parameters are integral, Mp parameters half-integral\n";
    return kUsage;
  } catch (const SpinorialWeightError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: highest weights here require even p_n\n";
    return kUsage;
  } catch (const DominanceError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: enter a dominant weight, e.g. --hw 2,1\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    err << "hint: run the subcommand with --help\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIdentityFailure;
  }
  return kUsage;
}

}  // namespace superdirac
