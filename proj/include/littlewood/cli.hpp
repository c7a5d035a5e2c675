// Command-line front door: argument parsing, report serialization, and the
// reproducibility manifest. Exit codes: 0 success, 1 runtime failure
// (budget or oracle overflow), 2 usage error (bad flags or malformed
// polynomial text).
#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "littlewood/census.hpp"
#include "littlewood/certify.hpp"
#include "littlewood/factorize.hpp"
#include "littlewood/json_io.hpp"
#include "littlewood/montecarlo.hpp"
#include "littlewood/parallel.hpp"
#include "littlewood/textio.hpp"
#include "littlewood/version.hpp"

namespace littlewood::cli {

enum class PolyKind { Univariate, Bivariate };

// The text-format entry point shared by every subcommand that reads a
// polynomial. Throws ParseError with a distinct diagnostic per defect.
inline std::variant<UniPoly, BiPoly> parse_polynomial(const std::string& text, PolyKind kind) {
  if (kind == PolyKind::Univariate) return parse_unipoly(text);
  return parse_bipoly(text);
}

namespace detail {

inline uint64_t env_u64(const char* name, uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  return (end && *end == '\0') ? parsed : fallback;
}

inline std::string iso_timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json manifest_base(const std::vector<std::string>& args, unsigned workers) {
  std::string command = "littlewood";
  for (const auto& a : args) {
    command.push_back(' ');
    command += a;
  }
  return Json{{"version", kVersion},
              {"command", command},
              {"timestamp_utc", iso_timestamp_utc()},
              {"workers", workers}};
}

inline void emit(Json manifest, Json report, std::ostream& out) {
  out << Json{{"manifest", std::move(manifest)}, {"report", std::move(report)}}.dump(2) << "\n";
}

inline uint64_t resolve_seed(const std::optional<uint64_t>& given, std::ostream& err) {
  if (given) return *given;
  std::random_device rd;
  const uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  err << "no --seed given; generated seed " << seed << " (recorded in the manifest)\n";
  return seed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact irreducibility certificates, censuses, and sampling for sign-coefficient polynomials"};
  app.require_subcommand(1);

  unsigned jobs = static_cast<unsigned>(detail::env_u64("LITTLEWOOD_JOBS", default_jobs()));
  uint64_t budget = detail::env_u64("LITTLEWOOD_BUDGET", CensusOptions{}.budget);
  bool csv = false;

  std::string poly_text;
  int r = 0;
  long n_height = 1;
  uint64_t trials = 0;
  std::optional<uint64_t> seed;
  bool use_oracle = false;
  bool allow_general = false;
  long eval_point = 2;
  double confidence = 0.95;
  std::string variant_name = "all-odd";
  std::string r_list_text;
  long vb0 = 0, vc0 = 0, vbs = 0, vct = 0;
  int vs = 0, vt = 0;

  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "worker threads (env LITTLEWOOD_JOBS)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "enumeration budget (env LITTLEWOOD_BUDGET)");
  };

  CLI::App* factor = app.add_subcommand("factor", "factor a univariate integer polynomial");
  factor->add_option("--poly", poly_text, "comma-separated coefficients, ascending")->required();

  CLI::App* certify = app.add_subcommand("certify", "irreducibility certificate for a bivariate polynomial");
  certify->add_option("--poly", poly_text, "rows over Y separated by ';'")->required();
  certify->add_flag("--oracle", use_oracle, "settle Unknown outcomes with the Kronecker oracle");
  certify->add_flag("--allow-general", allow_general, "accept non +-1 coefficients (weaker certificate)");
  certify->add_option("--point", eval_point, "even evaluation point, |point| >= 2 (default 2)");

  CLI::App* census_omega_cmd = app.add_subcommand("census-omega", "exact reducibility census of Omega(r, N)");
  census_omega_cmd->add_option("--r", r, "degree")->required();
  census_omega_cmd->add_option("--n-height", n_height, "height parameter N (coefficients odd, |a_i| <= 2N-1)")->required();
  census_omega_cmd->add_option("--variant", variant_name, "all-odd (default) or leading-odd");
  census_omega_cmd->add_flag("--csv", csv, "emit a CSV row instead of JSON");
  add_jobs(census_omega_cmd);
  add_budget(census_omega_cmd);

  CLI::App* census_box_cmd = app.add_subcommand("census-box", "exact reducibility census of the height box");
  census_box_cmd->add_option("--r", r, "degree")->required();
  census_box_cmd->add_option("--n-height", n_height, "height bound N")->required();
  census_box_cmd->add_flag("--csv", csv, "emit a CSV row instead of JSON");
  add_jobs(census_box_cmd);
  add_budget(census_box_cmd);

  CLI::App* census_bivar_cmd = app.add_subcommand("census-bivar", "exact census of the +-1 bivariate family");
  census_bivar_cmd->add_option("--r", r, "bidegree (side r+1)")->required();
  census_bivar_cmd->add_flag("--csv", csv, "emit a CSV row instead of JSON");
  add_jobs(census_bivar_cmd);
  add_budget(census_bivar_cmd);

  CLI::App* bound_cmd = app.add_subcommand("bound", "explicit divisor-sum count bound for Omega(r, N)");
  bound_cmd->add_option("--r", r, "degree, >= 2")->required();
  bound_cmd->add_option("--n-height", n_height, "height parameter N")->required();
  bound_cmd->add_flag("--csv", csv, "emit a CSV row instead of JSON");

  CLI::App* vset_cmd = app.add_subcommand("vset", "cardinality of V(b0, c0, bs, ct, s, t) in Omega(s+t, N)");
  vset_cmd->add_option("--b0", vb0)->required();
  vset_cmd->add_option("--c0", vc0)->required();
  vset_cmd->add_option("--bs", vbs)->required();
  vset_cmd->add_option("--ct", vct)->required();
  vset_cmd->add_option("--s", vs)->required();
  vset_cmd->add_option("--t", vt)->required();
  vset_cmd->add_option("--n-height", n_height)->required();
  add_budget(vset_cmd);

  CLI::App* sample_cmd = app.add_subcommand("sample", "Monte Carlo certificate tallies for random +-1 bivariate polynomials");
  sample_cmd->add_option("--r", r, "bidegree")->required();
  sample_cmd->add_option("--trials", trials, "sample count")->required();
  sample_cmd->add_option("--seed", seed, "64-bit master seed (generated and printed if absent)");
  sample_cmd->add_flag("--oracle", use_oracle, "settle Unknown outcomes exactly (desk scale only)");
  sample_cmd->add_option("--confidence", confidence, "Wilson confidence level (default 0.95)");
  sample_cmd->add_option("--point", eval_point, "even evaluation point (default 2)");
  add_jobs(sample_cmd);

  CLI::App* trend_cmd = app.add_subcommand("trend", "uncertified-fraction trend over a list of r");
  trend_cmd->add_option("--r-list", r_list_text, "comma-separated ascending degrees, e.g. 8,10,12,14")->required();
  trend_cmd->add_option("--trials", trials, "samples per r")->required();
  trend_cmd->add_option("--seed", seed, "64-bit master seed (generated and printed if absent)");
  trend_cmd->add_flag("--oracle", use_oracle, "settle Unknown outcomes exactly (desk scale only)");
  trend_cmd->add_option("--confidence", confidence, "Wilson confidence level (default 0.95)");
  trend_cmd->add_flag("--csv", csv, "emit the CSV trend table instead of JSON");
  add_jobs(trend_cmd);

  CLI::App* sample_uni_cmd = app.add_subcommand(
      "sample-uni", "exploratory: reducibility frequency of random univariate +-1 polynomials");
  sample_uni_cmd->add_option("--r", r, "degree")->required();
  sample_uni_cmd->add_option("--trials", trials, "sample count")->required();
  sample_uni_cmd->add_option("--seed", seed, "64-bit master seed");
  sample_uni_cmd->add_option("--confidence", confidence, "Wilson confidence level");
  add_jobs(sample_uni_cmd);

  std::vector<const char*> argv;
  argv.push_back("littlewood");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*factor) {
      const UniPoly f = std::get<UniPoly>(parse_polynomial(poly_text, PolyKind::Univariate));
      FactorStats stats;
      const FactorizationZ fact = factor_z(f, &stats);
      Json report = to_json(fact, &stats);
      report["input"] = to_text(f);
      detail::emit(detail::manifest_base(args, 1), std::move(report), out);
      return 0;
    }
    if (*certify) {
      const BiPoly f = std::get<BiPoly>(parse_polynomial(poly_text, PolyKind::Bivariate));
      CertifyOptions opts;
      opts.evaluation_point = Int(eval_point);
      opts.use_oracle = use_oracle;
      opts.allow_general = allow_general;
      const CertificateOutcome outcome = certify_irreducible(f, opts);
      Json report = to_json(outcome);
      report["input"] = to_text(f);
      Json manifest = detail::manifest_base(args, 1);
      manifest["evaluation_point"] = std::to_string(eval_point);
      detail::emit(std::move(manifest), std::move(report), out);
      return 0;
    }
    if (*census_omega_cmd) {
      OmegaVariant variant;
      if (variant_name == "all-odd")
        variant = OmegaVariant::AllOdd;
      else if (variant_name == "leading-odd")
        variant = OmegaVariant::LeadingOddOnly;
      else
        throw std::invalid_argument("census-omega: --variant must be all-odd or leading-odd");
      const CensusReport report = census_omega(r, n_height, {budget, jobs}, variant);
      if (csv) {
        out << "family,r,n_height,total,reducible,probability\n"
            << report.family << "," << report.r << "," << report.n_height << ","
            << report.total.get_str() << "," << report.reducible_count.get_str() << ","
            << report.probability.get_d() << "\n";
        return 0;
      }
      Json manifest = detail::manifest_base(args, jobs);
      manifest["omega_variant"] = to_string(variant);
      manifest["budget"] = budget;
      detail::emit(std::move(manifest), to_json(report), out);
      return 0;
    }
    if (*census_box_cmd || *census_bivar_cmd) {
      const CensusReport report = *census_box_cmd ? census_box(r, n_height, {budget, jobs})
                                                  : census_bivariate(r, {budget, jobs});
      if (csv) {
        out << "family,r,n_height,total,reducible,probability\n"
            << report.family << "," << report.r << "," << report.n_height << ","
            << report.total.get_str() << "," << report.reducible_count.get_str() << ","
            << report.probability.get_d() << "\n";
        return 0;
      }
      Json manifest = detail::manifest_base(args, jobs);
      manifest["budget"] = budget;
      detail::emit(std::move(manifest), to_json(report), out);
      return 0;
    }
    if (*bound_cmd) {
      const BoundReport report = explicit_bound(r, n_height);
      if (csv) {
        out << "r,n_height,m,divisor_sum,explicit_count_bound,probability_bound\n"
            << report.r << "," << report.n_height << "," << report.m.get_str() << ","
            << report.divisor_sum_value.get_str() << ","
            << report.explicit_count_bound.get_str() << ","
            << report.probability_bound.get_d() << "\n";
        return 0;
      }
      detail::emit(detail::manifest_base(args, 1), to_json(report), out);
      return 0;
    }
    if (*vset_cmd) {
      const VParams params{Int(vb0), Int(vc0), Int(vbs), Int(vct), vs, vt};
      const Int count = count_v(params, n_height, {budget, 1});
      const Int cap = pow_int(Int(2 * n_height + 1), static_cast<unsigned long>(vs + vt - 2));
      Json report{{"b0", std::to_string(vb0)}, {"c0", std::to_string(vc0)},
                  {"bs", std::to_string(vbs)}, {"ct", std::to_string(vct)},
                  {"s", vs},                   {"t", vt},
                  {"n_height", n_height},      {"count", json_int(count)},
                  {"m_power_bound", json_int(cap)}, {"within_bound", count <= cap}};
      Json manifest = detail::manifest_base(args, 1);
      manifest["budget"] = budget;
      detail::emit(std::move(manifest), std::move(report), out);
      return 0;
    }
    if (*sample_cmd || *trend_cmd) {
      const uint64_t master = detail::resolve_seed(seed, err);
      MonteCarloOptions opts;
      opts.use_oracle = use_oracle;
      opts.confidence = confidence;
      opts.jobs = jobs;
      opts.evaluation_point = Int(eval_point);
      Json manifest = detail::manifest_base(args, jobs);
      manifest["seed"] = std::to_string(master);
      manifest["rng"] = kRngName;
      manifest["evaluation_point"] = std::to_string(eval_point);
      if (*sample_cmd) {
        const EstimateReport report = run_monte_carlo(r, trials, master, opts);
        detail::emit(std::move(manifest), to_json(report), out);
        return 0;
      }
      std::vector<int> r_list;
      for (const auto& tok : littlewood::detail::split(r_list_text, ','))
        r_list.push_back(std::stoi(tok));
      const auto rows = trend_experiment(r_list, trials, master, opts);
      if (csv) {
        out << trend_to_csv(rows);
        return 0;
      }
      detail::emit(std::move(manifest), trend_to_json(rows), out);
      return 0;
    }
    if (*sample_uni_cmd) {
      const uint64_t master = detail::resolve_seed(seed, err);
      if (r < 1) throw std::invalid_argument("sample-uni: need r >= 1");
      if (trials < 1) throw std::invalid_argument("sample-uni: need at least one trial");
      std::vector<uint64_t> counts(std::max(1u, jobs), 0);
      parallel_ranges(trials, jobs, [&](unsigned worker, uint64_t lo, uint64_t hi) {
        uint64_t local = 0;
        for (uint64_t k = lo; k < hi; ++k) {
          Xoshiro256 stream = derive_stream(master, k);
          std::vector<Int> c(static_cast<size_t>(r) + 1);
          for (auto& v : c) v = stream.next_sign();
          if (is_reducible_z(UniPoly(std::move(c)))) ++local;
        }
        counts[worker] = local;
      });
      uint64_t reducible = 0;
      for (uint64_t c : counts) reducible += c;
      const auto [low, high] = wilson_interval(reducible, trials, confidence);
      Json report{{"family", "univariate-signs"},
                  {"r", r},
                  {"trials", trials},
                  {"reducible", reducible},
                  {"p_hat", json_rat(make_rat(Int(static_cast<unsigned long>(reducible)),
                                              Int(static_cast<unsigned long>(trials))))},
                  {"wilson_low", low},
                  {"wilson_high", high},
                  {"confidence", confidence}};
      Json manifest = detail::manifest_base(args, jobs);
      manifest["seed"] = std::to_string(master);
      manifest["rng"] = kRngName;
      detail::emit(std::move(manifest), std::move(report), out);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "runtime error: " << e.what() << "\n";
    return 1;
  } catch (const OracleOverflow& e) {
    err << "runtime error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace littlewood::cli
