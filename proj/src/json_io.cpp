#include "superdirac/json_io.hpp"

namespace superdirac {

namespace {

long to_long(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("coordinate too large for JSON integer field");
  return v.get_si();
}

}  // namespace


Json weight_json(const Weight& w) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < w.rank(); ++i)
    arr.push_back(to_long(w.doubled(i)));
  return Json{{"2lambda", arr}};
}

Weight weight_from_json(const Json& j) {
  std::vector<Int> d;
  for (const auto& v : j.at("2lambda")) d.emplace_back(v.get<long>());
  return Weight(std::move(d));
}

Json character_json(const FormalCharacter& f) {
  Json terms = Json::array();
  for (const auto& [mu, c] : f.terms()) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < mu.rank(); ++i)
      exp.push_back(to_long(mu.doubled(i)));
    terms.push_back(Json{{"2exp", exp}, {"coef", c.get_str()}});
  }
  return terms;
}

FormalCharacter character_from_json(const Json& j, std::size_t rank) {
  FormalCharacter f(rank);
  for (const auto& t : j) {
    std::vector<Int> d;
    for (const auto& v : t.at("2exp")) d.emplace_back(v.get<long>());
    f.add_term(Weight(std::move(d)), Int(t.at("coef").get<std::string>()));
  }
  return f;
}

Json series_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [mu, c] : s.terms()) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < s.rank(); ++i)
      exp.push_back(to_long(s.offset().doubled(i) - mu.doubled(i)));
    terms.push_back(Json{{"qexp", exp}, {"coef", c.get_str()}});
  }
  Json off = Json::array();
  for (std::size_t i = 0; i < s.rank(); ++i)
    off.push_back(to_long(s.offset().doubled(i)));
  return Json{{"offset2", off}, {"order", s.order()}, {"terms", terms}};
}

TruncatedSeries series_from_json(const Json& j) {
  std::vector<Int> off;
  for (const auto& v : j.at("offset2")) off.emplace_back(v.get<long>());
  Weight offset(std::move(off));
  TruncatedSeries s(offset.rank(), offset, j.at("order").get<long>());
  for (const auto& t : j.at("terms")) {
    std::vector<Int> d;
    std::size_t i = 0;
    for (const auto& v : t.at("qexp")) {
      d.emplace_back(offset.doubled(i) - Int(v.get<long>()));
      ++i;
    }
    s.add_term(Weight(std::move(d)), Int(t.at("coef").get<std::string>()));
  }
  return s;
}

Json record_json(const IrreducibleCharacterRecord& rec) {
  return Json{{"highest_weight", weight_json(rec.highest_weight.lambda())},
              {"dimension", rec.dimension.get_str()},
              {"inf_char", weight_json(rec.infinitesimal_character)},
              {"terms", character_json(rec.character)}};
}

Json parameter_json(const HarishChandraParameter& p) {
  Json j = weight_json(p.lambda);
  j["parity"] =
      p.parity == ParameterParity::Integral ? "integral" : "genuine";
  return j;
}

Json lift_certificate_json(const LiftCertificate& c) {
  return Json{{"lambda", c.lambda.str()},
              {"lambda_prime", c.lambda_prime.str()},
              {"orbit_sign", c.orbit_sign},
              {"order", c.order},
              {"numerators_match", c.numerators_match},
              {"series_match", c.series_match},
              {"pass", c.pass}};
}

Json dirac_index_certificate_json(const DiracIndexCertificate& c) {
  Json j;
  if (c.highest_weight)
    j["highest_weight"] = weight_json(c.highest_weight->lambda());
  else
    j["highest_weight"] = nullptr;
  j["order"] = c.order;
  j["lhs"] = series_json(c.lhs);
  j["rhs"] = series_json(c.rhs);
  j["phi_sign"] = "+leading";
  j["pass"] = c.verdict;
  return j;
}

Json transfer_factor_certificate_json(const TransferFactorCertificate& c) {
  return Json{{"n", c.n},
              {"order", c.order},
              {"product_is_one", c.product_is_one},
              {"matches_ratio", c.matches_ratio},
              {"phi_sign", "+leading"},
              {"pass", c.passed()}};
}

Json dirac_square_certificate_json(const DiracSquareCertificate& c) {
  return Json{{"identity", "D^2 + Omega_g - Omega_g0_delta + C == 0"},
              {"n", c.n},
              {"convention",
               c.convention == TensorSignConvention::Koszul ? "koszul"
                                                            : "ungraded"},
              {"residual_terms", c.residual_terms},
              {"invariance_residuals", c.invariance_residuals},
              {"basis_independent", c.basis_independent},
              {"C", c.constant.get_str()},
              {"pass", c.pass()}};
}

Json kostant_certificate_json(const KostantCertificate& c) {
  return Json{{"identity", "sum_k alpha(W_k)^2 is scalar == supertrace/8"},
              {"n", c.n},
              {"scalar", c.scalar},
              {"C", c.constant.get_str()},
              {"trace_on_odd", c.trace_on_odd.get_str()},
              {"eighth_supertrace", c.eighth_supertrace},
              {"pass", c.scalar && c.eighth_supertrace}};
}

Json bijection_report_json(const BijectionReport& r) {
  return Json{{"n", r.n},
              {"bound", r.bound},
              {"parameters_checked", r.parameters_checked},
              {"dominant_parameters", r.dominant_parameters},
              {"injective", r.injective},
              {"all_genuine_regular", r.all_genuine_regular},
              {"all_roundtrip", r.all_roundtrip},
              {"dominance_preserved", r.dominance_preserved},
              {"chamber_compatible", r.chamber_compatible},
              {"pass", r.pass()}};
}

Json tensor_element_json(const TensorElement& t) {
  const auto& g = t.algebra().structure();
  Json arr = Json::array();
  for (const auto& [term, c] : t.terms()) {
    Json uw = Json::array();
    for (int l : term.u) uw.push_back(g.name(l));
    Json d = Json::array(), x = Json::array();
    for (unsigned v : term.w.d) d.push_back(v);
    for (unsigned v : term.w.x) x.push_back(v);
    arr.push_back(Json{{"u_word", uw},
                       {"w_word", Json{{"d", d}, {"x", x}}},
                       {"coef", c.get_str()}});
  }
  return arr;
}

Json multiplicities_json(const MultiplicityMap& m) {
  Json arr = Json::array();
  for (const auto& [mu, c] : m) {
    arr.push_back(Json{{"weight", mu.str()}, {"mult", c.get_str()}});
  }
  return arr;
}

Json cohomology_json(const DiracCohomologyResult& r) {
  return Json{{"m", r.m},
              {"order", r.order},
              {"h_plus", multiplicities_json(r.hplus)},
              {"h_minus", multiplicities_json(r.hminus)},
              {"euler_matches", r.euler_matches},
              {"casimir_scalar", r.casimir_scalar.get_str()},
              {"casimir_scalar_ok", r.casimir_scalar_ok},
              {"pass", r.euler_matches && r.casimir_scalar_ok}};
}

}  // namespace superdirac
