// JSON serialization of reports. Exact integers are decimal strings (they
// routinely exceed 64 bits), rationals are {num, den} string pairs, and
// polynomials use the CLI text format so every emitted value re-parses.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "littlewood/census.hpp"
#include "littlewood/certify.hpp"
#include "littlewood/factorize.hpp"
#include "littlewood/montecarlo.hpp"
#include "littlewood/textio.hpp"

namespace littlewood {

using Json = nlohmann::json;

inline Json json_int(const Int& v) { return v.get_str(); }

inline Json json_rat(const Rat& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Json to_json(const FactorizationZ& f, const FactorStats* stats = nullptr) {
  Json factors = Json::array();
  for (const auto& [g, mult] : f.factors) {
    Json coeffs = Json::array();
    for (const Int& c : g.coeffs()) coeffs.push_back(c.get_str());
    factors.push_back(Json{{"coeffs", coeffs}, {"multiplicity", mult}});
  }
  Json out{{"sign", f.sign}, {"content", json_int(f.content)}, {"factors", factors}};
  if (stats && stats->prime != 0) {
    out["prime"] = std::to_string(stats->prime);
    out["lift_exponent"] = stats->lift_exponent;
  }
  return out;
}

inline Json to_json(const CertificateOutcome& outcome) {
  Json out{
      {"tag", to_string(outcome.tag)},
      {"prongs",
       Json{{"x2_reducible", outcome.prongs.x_specialization_reducible},
            {"y2_reducible", outcome.prongs.y_specialization_reducible},
            {"split", outcome.prongs.nonconstant_split}}},
      {"oracle_used", outcome.oracle_used},
      {"oracle_overflow", outcome.oracle_overflow},
      {"evaluation_point", json_int(outcome.evaluation_point)},
  };
  if (outcome.split) {
    out["witness"] = Json{{"type", "split"},
                          {"f_x", to_text(outcome.split->f_x)},
                          {"g_y", to_text(outcome.split->g_y)}};
  } else if (outcome.factors) {
    out["witness"] = Json{{"type", "factorization"},
                          {"g", to_text(outcome.factors->g)},
                          {"h", to_text(outcome.factors->h)}};
  }
  return out;
}

inline Json to_json(const CensusReport& report) {
  Json out{
      {"family", report.family},
      {"r", report.r},
      {"n_height", report.n_height},
      {"total", json_int(report.total)},
      {"reducible", json_int(report.reducible_count)},
      {"probability", json_rat(report.probability)},
  };
  if (report.breakdown) {
    out["breakdown"] = Json{
        {"split", json_int(report.breakdown->split)},
        {"x2_reducible", json_int(report.breakdown->x_specialization_reducible)},
        {"y2_reducible", json_int(report.breakdown->y_specialization_reducible)},
        {"reducible_without_prong", json_int(report.breakdown->reducible_without_prong)},
    };
  }
  if (report.box_lower_bound_holds) out["lower_bound_holds"] = *report.box_lower_bound_holds;
  return out;
}

inline Json to_json(const BoundReport& report) {
  Json out{
      {"r", report.r},
      {"n_height", report.n_height},
      {"m", json_int(report.m)},
      {"divisor_sum", json_int(report.divisor_sum_value)},
      {"explicit_count_bound", json_int(report.explicit_count_bound)},
      {"probability_bound", json_rat(report.probability_bound)},
      {"divisor_sum_ratio", report.divisor_sum_ratio},
  };
  out["paper_form_ratio"] = report.paper_form_ratio ? Json(*report.paper_form_ratio) : Json(nullptr);
  return out;
}

inline Json to_json(const EstimateReport& report) {
  return Json{
      {"r", report.r},
      {"trials", report.trials},
      {"tallies",
       Json{{"certified_irreducible", report.tallies.certified_irreducible},
            {"reducible", report.tallies.reducible},
            {"unknown", report.tallies.unknown},
            {"oracle_overflow", report.tallies.oracle_overflow}}},
      {"prongs",
       Json{{"split", report.tallies.split},
            {"x2_reducible", report.tallies.x_specialization_reducible},
            {"y2_reducible", report.tallies.y_specialization_reducible}}},
      {"p_hat", json_rat(report.p_hat)},
      {"wilson_low", report.wilson_low},
      {"wilson_high", report.wilson_high},
      {"manifest",
       Json{{"master_seed", std::to_string(report.manifest.master_seed)},
            {"stream_base", std::to_string(report.manifest.stream_base)},
            {"evaluation_point", json_int(report.manifest.evaluation_point)},
            {"use_oracle", report.manifest.use_oracle},
            {"confidence", report.manifest.confidence},
            {"rng", report.manifest.rng},
            {"version", report.manifest.version}}},
  };
}

inline double r3_over_2r(int r) {
  return static_cast<double>(r) * r * r / std::ldexp(1.0, r);
}

inline Json trend_to_json(const std::vector<EstimateReport>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j = to_json(row);
    j["r3_over_2r"] = r3_over_2r(row.r);
    arr.push_back(std::move(j));
  }
  return Json{{"rows", arr}};
}

// CSV row format: r, n, certified, reducible, unknown, p_hat, wilson_low,
// wilson_high, r3_over_2r. The unknown column folds in oracle overflows.
inline std::string trend_to_csv(const std::vector<EstimateReport>& rows) {
  std::string out = "r,n,certified,reducible,unknown,p_hat,wilson_low,wilson_high,r3_over_2r\n";
  char buf[160];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%d,%llu,%llu,%llu,%llu,%.17g,%.17g,%.17g,%.17g\n", row.r,
                  static_cast<unsigned long long>(row.trials),
                  static_cast<unsigned long long>(row.tallies.certified_irreducible),
                  static_cast<unsigned long long>(row.tallies.reducible),
                  static_cast<unsigned long long>(row.tallies.unknown +
                                                  row.tallies.oracle_overflow),
                  row.p_hat.get_d(), row.wilson_low, row.wilson_high, r3_over_2r(row.r));
    out += buf;
  }
  return out;
}

}  // namespace littlewood
