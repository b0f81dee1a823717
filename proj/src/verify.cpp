#include "superdirac/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace superdirac {

const std::vector<std::string> kVerifySuites = {
    "denominator",  "characters",      "infinitesimal", "oscillator",
    "dirac-index",  "dirac-square",    "kostant",       "dirac-cohomology",
    "lifting",      "transfer"};

bool is_verify_suite(const std::string& name) {
  return name == "all" ||
         std::find(kVerifySuites.begin(), kVerifySuites.end(), name) !=
             kVerifySuites.end();
}

namespace {

struct Check {
  std::string suite;
  std::string identity;
  std::function<std::pair<bool, std::string>()> run;
};

std::vector<HighestWeight> weight_grid(std::size_t n, int pmax) {
  std::vector<HighestWeight> out;
  std::vector<Int> p(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(HighestWeight::from_coefficients(p));
      return;
    }
    int step = (i + 1 == n) ? 2 : 1;
    for (int v = 0; v <= pmax; v += step) {
      p[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

void add_denominator_checks(std::vector<Check>& checks, std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    checks.push_back({"denominator", "D_C == D_B * D1 at n=" + std::to_string(n),
                      [n]() -> std::pair<bool, std::string> {
                        bool ok = weyl_denominator(RootKind::C, n) ==
                                  weyl_denominator(RootKind::B, n) *
                                      odd_denominator(n);
                        return {ok, ""};
                      }});
    for (auto kind : {RootKind::B, RootKind::C}) {
      std::string id = std::string("N(rho) == D for ") + kind_name(kind) +
                       " at n=" + std::to_string(n);
      checks.push_back({"denominator", id,
                        [kind, n]() -> std::pair<bool, std::string> {
                          bool ok = weyl_numerator(rho(kind, n)) ==
                                    weyl_denominator(kind, n);
                          return {ok, ""};
                        }});
    }
  }
}

void add_character_checks(std::vector<Check>& checks, std::size_t n_max) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 3); ++n) {
    for (const auto& hw : weight_grid(n, 3)) {
      std::string id = "characters agree at n=" + std::to_string(n) +
                       " hw=" + hw.lambda().str();
      checks.push_back({"characters", id,
                        [hw]() -> std::pair<bool, std::string> {
                          auto b = character_B(hw);
                          auto o = character_osp(hw);
                          auto f = freudenthal_multiplicities(hw);
                          if (!(b.character == o.character))
                            return {false, "B and osp formulas differ"};
                          if (b.character.terms().size() != f.size())
                            return {false, "support mismatch vs Freudenthal"};
                          for (const auto& [mu, m] : f)
                            if (b.character.coefficient(mu) != m)
                              return {false,
                                      "multiplicity mismatch at " + mu.str()};
                          if (b.dimension != weyl_dimension(hw, RootKind::B))
                            return {false, "dimension mismatch"};
                          return {true, ""};
                        }});
    }
  }
}

void add_infinitesimal_checks(std::vector<Check>& checks, std::size_t n_max) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 3); ++n) {
    checks.push_back(
        {"infinitesimal",
         "inf characters agree across the grid at n=" + std::to_string(n),
         [n]() -> std::pair<bool, std::string> {
           for (const auto& hw : weight_grid(n, 3))
             if (!(infinitesimal_character(hw, RootKind::OSP) ==
                   infinitesimal_character(hw, RootKind::B)))
               return {false, hw.lambda().str()};
           return {true, ""};
         }});
  }
}

void add_oscillator_checks(std::vector<Check>& checks, std::size_t n_max,
                           long order) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 3); ++n) {
    checks.push_back({"oscillator",
                      "(chM+ - chM-) * D1 == 1 and expand(D_B/D_C) == chM+ - "
                      "chM- at n=" +
                          std::to_string(n),
                      [n, order]() -> std::pair<bool, std::string> {
                        auto c = transfer_factor_identity(n, order);
                        std::string detail;
                        if (!c.product_is_one) detail += "product != 1;";
                        if (!c.matches_ratio) detail += "ratio mismatch;";
                        return {c.passed(), detail};
                      }});
    checks.push_back({"oscillator",
                      "trivial Dirac index at n=" + std::to_string(n),
                      [n, order]() -> std::pair<bool, std::string> {
                        return {dirac_index_trivial(n, order).verdict, ""};
                      }});
  }
}

void add_dirac_index_checks(std::vector<Check>& checks, std::size_t n_max,
                            long order) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 2); ++n) {
    for (const auto& hw : weight_grid(n, 3)) {
      std::string id = "chV*(chM+ - chM-) == expand(N(hw+rho)/D_C) at n=" +
                       std::to_string(n) + " hw=" + hw.lambda().str();
      checks.push_back({"dirac-index", id,
                        [hw, order]() -> std::pair<bool, std::string> {
                          return {dirac_index_character(hw, order).verdict, ""};
                        }});
    }
  }
}

void add_dirac_square_checks(std::vector<Check>& checks, std::size_t n_max) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 2); ++n) {
    checks.push_back(
        {"dirac-square", "dirac_square_residual_zero at n=" + std::to_string(n),
         [n]() -> std::pair<bool, std::string> {
           SuperAlgebraStructure g(n);
           TensorAlgebra alg(g);
           auto cert = verify_dirac_square(alg);
           std::ostringstream os;
           if (cert.residual_terms)
             os << cert.residual_terms << " residual terms;";
           if (cert.invariance_residuals)
             os << cert.invariance_residuals << " invariance residuals;";
           if (!cert.basis_independent) os << "basis dependence;";
           return {cert.pass(), os.str()};
         }});
  }
}

void add_kostant_checks(std::vector<Check>& checks, std::size_t n_max) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 2); ++n) {
    checks.push_back(
        {"kostant",
         "sum alpha(W_k)^2 scalar == supertrace/8 at n=" + std::to_string(n),
         [n]() -> std::pair<bool, std::string> {
           SuperAlgebraStructure g(n);
           TensorAlgebra alg(g);
           auto cert = kostant_constant(alg);
           bool ok = cert.scalar && cert.eighth_supertrace;
           return {ok, ok ? "" : "C=" + cert.constant.get_str()};
         }});
  }
}

void add_cohomology_checks(std::vector<Check>& checks, long order) {
  for (long m = 0; m <= 4; ++m) {
    checks.push_back(
        {"dirac-cohomology",
         "Euler(H_D) == chV*(chM+ - chM-) and Casimir scalar at m=" +
             std::to_string(m),
         [m, order]() -> std::pair<bool, std::string> {
           SuperAlgebraStructure g(1);
           TensorAlgebra alg(g);
           auto mod = build_module(alg, m);
           long ord = std::max(order, 2 * (2 * m + 1));
           auto res = dirac_cohomology(alg, mod, ord);
           std::string detail;
           if (!res.euler_matches) detail += "euler mismatch;";
           if (!res.casimir_scalar_ok) detail += "casimir scalar mismatch;";
           return {res.euler_matches && res.casimir_scalar_ok, detail};
         }});
  }
}

void add_lifting_checks(std::vector<Check>& checks, std::size_t n_max) {
  checks.push_back({"lifting", "lift-ds (2,1) -> (3/2,1/2)",
                    []() -> std::pair<bool, std::string> {
                      auto p = lift_ds_parameter(
                          classify(parse_weight("2,1")));
                      return {p.lambda.str() == "3/2,1/2", p.lambda.str()};
                    }});
  checks.push_back({"lifting", "lift-ds (3,1,-2) -> (5/2,1/2,-3/2)",
                    []() -> std::pair<bool, std::string> {
                      auto p = lift_ds_parameter(
                          classify(parse_weight("3,1,-2")));
                      return {p.lambda.str() == "5/2,1/2,-3/2", p.lambda.str()};
                    }});
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 3); ++n) {
    checks.push_back(
        {"lifting",
         "parameter lift bijective up to bound 6 at n=" + std::to_string(n),
         [n]() -> std::pair<bool, std::string> {
           auto rep = bijection_suite(n, 6);
           return {rep.pass(), ""};
         }});
  }
}

void add_transfer_checks(std::vector<Check>& checks, std::size_t n_max,
                         long order) {
  checks.push_back({"transfer", "Theta_Sp(l') == Theta_SO(l) * Phi at n=1",
                    [order]() -> std::pair<bool, std::string> {
                      for (int a = 1; a <= 7; a += 2) {
                        auto c = verify_adams_transfer(
                            Weight(std::vector<Int>{Int(a)}), 1, order);
                        if (!c.pass) return {false, c.lambda.str()};
                      }
                      return {true, ""};
                    }});
  if (n_max >= 2) {
    checks.push_back(
        {"transfer", "Theta_Sp(l') == Theta_SO(l) * Phi at n=2",
         [order]() -> std::pair<bool, std::string> {
           for (int a = 1; a <= 7; a += 2)
             for (int b = 1; b <= 7; b += 2) {
               if (a == b) continue;
               for (std::size_t k : {0u, 1u, 2u}) {
                 if (k != 1 && a < b) continue;
                 auto c = verify_adams_transfer(
                     Weight(std::vector<Int>{Int(a), Int(b)}), k, order);
                 if (!c.pass)
                   return {false, c.lambda.str() + " split " +
                                      std::to_string(k)};
               }
             }
           return {true, ""};
         }});
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& selection,
                                    const VerifyLimits& limits) {
  std::vector<Check> checks;
  auto want = [&](const std::string& s) {
    return selection == "all" || selection == s;
  };
  std::size_t n_max = std::max<std::size_t>(1, limits.n_max);
  if (want("denominator")) add_denominator_checks(checks, n_max);
  if (want("characters")) add_character_checks(checks, n_max);
  if (want("infinitesimal")) add_infinitesimal_checks(checks, n_max);
  if (want("oscillator")) add_oscillator_checks(checks, n_max, limits.order);
  if (want("dirac-index")) add_dirac_index_checks(checks, n_max, limits.order);
  if (want("dirac-square")) add_dirac_square_checks(checks, n_max);
  if (want("kostant")) add_kostant_checks(checks, n_max);
  if (want("dirac-cohomology")) add_cohomology_checks(checks, limits.order);
  if (want("lifting")) add_lifting_checks(checks, n_max);
  if (want("transfer")) add_transfer_checks(checks, n_max, limits.order);

  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) break;
      auto start = std::chrono::steady_clock::now();
      bool pass = false;
      std::string detail;
      try {
        std::tie(pass, detail) = checks[i].run();
      } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
      }
      std::chrono::duration<double> dt =
          std::chrono::steady_clock::now() - start;
      results[i] =
          CheckResult{checks[i].suite, checks[i].identity, pass, dt.count(),
                      detail};
    }
  };
  int jobs = std::max(1, limits.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.suite != b.suite) return a.suite < b.suite;
                     return a.identity < b.identity;
                   });
  return results;
}

Json verify_report_json(const std::vector<CheckResult>& results,
                        const VerifyLimits& limits) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    Json c{{"suite", r.suite}, {"identity", r.identity}, {"pass", r.pass}};
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(c);
  }
  return Json{{"schema_version", 1},
              {"limits",
               Json{{"n_max", limits.n_max},
                    {"order", limits.order},
                    {"jobs", limits.jobs}}},
              {"checks", checks},
              {"pass", all}};
}

}  // namespace superdirac
