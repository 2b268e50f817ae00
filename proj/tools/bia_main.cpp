// bia: construction, verification and simulation toolkit for blind
// interference alignment with staggered antenna switching.
//
// Exit codes: 0 success, 1 property violation, 2 usage or infeasible params.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bia/construct.hpp"
#include "bia/digest.hpp"
#include "bia/dof.hpp"
#include "bia/rng.hpp"
#include "bia/serialize.hpp"
#include "bia/simulate.hpp"
#include "bia/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bia::Error(bia::ErrorKind::Usage, "cannot open output file " + path);
  out << content;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::pair<long long, long long> parse_k_range(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const long long k = std::stoll(spec);
    return {k, k};
  }
  const long long lo = std::stoll(spec.substr(0, dots));
  const long long hi = std::stoll(spec.substr(dots + 2));
  if (lo < 1 || hi < lo) throw bia::Error(bia::ErrorKind::Usage, "bad --k range " + spec);
  return {lo, hi};
}

std::vector<double> parse_snr_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

struct CommonFlags {
  int users = 0;
  std::optional<int> order;
  std::string mode = "tight";
  uint64_t seed = 1;
};

bia::json flags_json(const CommonFlags& cf) {
  bia::json j;
  j["users"] = cf.users;
  if (cf.order) j["order"] = *cf.order;
  j["mode"] = cf.mode;
  j["seed"] = cf.seed;
  return j;
}

int run_construct(const CommonFlags& cf, const std::string& out_path) {
  const auto params =
      bia::derive_params(cf.users, cf.order, bia::build_mode_from_string(cf.mode));
  const auto bundle = bia::construct_bundle(params);
  bia::RunManifest manifest;
  manifest.command = "construct";
  manifest.flags = flags_json(cf);
  manifest.timestamp = bia::iso_timestamp_utc();
  const auto doc = bia::wrap_document(manifest, bia::bundle_payload(bundle));
  emit(out_path, bia::canonical_dump(doc));
  return kExitOk;
}

int run_verify(const CommonFlags& cf, const std::string& bundle_path, int seed_count,
               bool floating, const std::string& out_path) {
  bia::ConstructionBundle bundle;
  if (!bundle_path.empty()) {
    std::ifstream in(bundle_path);
    if (!in) throw bia::Error(bia::ErrorKind::Usage, "cannot read bundle " + bundle_path);
    bia::json doc = bia::json::parse(in);
    bundle = bia::bundle_from_json(doc.at("payload"));
  } else {
    const auto params =
        bia::derive_params(cf.users, cf.order, bia::build_mode_from_string(cf.mode));
    bundle = bia::construct_bundle(params);
  }
  std::vector<uint64_t> seeds;
  seeds.reserve(seed_count);
  for (int i = 0; i < seed_count; ++i) {
    seeds.push_back(bia::derive_seed(cf.seed, {bia::seed_tag::kVerify, uint64_t(i)}));
  }
  const auto report = bia::run_verification(
      bundle, seeds, floating ? bia::Arithmetic::Floating : bia::Arithmetic::Exact);
  bia::RunManifest manifest;
  manifest.command = "verify";
  manifest.flags = flags_json(cf);
  manifest.flags["seeds"] = seed_count;
  manifest.flags["arithmetic"] = floating ? "float" : "exact";
  manifest.timestamp = bia::iso_timestamp_utc();
  const auto doc = bia::wrap_document(manifest, bia::verification_to_json(report));
  emit(out_path, bia::canonical_dump(doc));
  if (!report.all_pass) {
    std::cerr << "verify: " << report.failed << " of " << report.failed + report.passed
              << " checks failed\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_dof(const std::string& k_spec, const std::string& out_path) {
  const auto [lo, hi] = parse_k_range(k_spec);
  std::ostringstream csv;
  csv << "K,r_star,d_star_num,d_star_den,d_star_float,ratio_to_half_sqrtK\n";
  for (long long k = lo; k <= hi; ++k) {
    const int r = bia::optimal_r(k);
    const auto d = bia::dof_formula(k, r);
    const double ratio = bia::rat_double(d) / (std::sqrt(double(k)) / 2.0);
    csv << k << "," << r << "," << d.get_num().get_str() << "," << d.get_den().get_str() << ","
        << format_double(bia::rat_double(d)) << "," << format_double(ratio) << "\n";
  }
  emit(out_path, csv.str());
  bia::RunManifest manifest;
  manifest.command = "dof";
  manifest.flags = bia::json{{"k", k_spec}};
  manifest.timestamp = bia::iso_timestamp_utc();
  manifest.outputs[out_path.empty() ? "stdout" : out_path] = "sha256:" + bia::sha256_hex(csv.str());
  std::cerr << bia::canonical_dump(bia::manifest_to_json(manifest));
  return kExitOk;
}

int run_simulate(const CommonFlags& cf, const std::string& snr_spec, int trials, int seed_count,
                 bool noiseless, const std::string& out_path, const std::string& summary_path) {
  const auto params =
      bia::derive_params(cf.users, cf.order, bia::build_mode_from_string(cf.mode));
  const auto bundle = bia::construct_bundle(params);

  // Pipeline integrity: refuse to simulate a construction that fails its own
  // verification.
  const std::vector<uint64_t> gate_seed = {
      bia::derive_seed(cf.seed, {bia::seed_tag::kVerify, 0})};
  const auto gate = bia::run_verification(bundle, gate_seed, bia::Arithmetic::Exact);
  if (!gate.all_pass) {
    std::cerr << "simulate: verification stage failed (" << gate.failed
              << " checks); refusing to simulate\n";
    return kExitViolation;
  }

  bia::SimulationConfig config;
  config.params = params;
  config.snr_db = parse_snr_list(snr_spec);
  config.trials_per_point = trials;
  config.noiseless_guard = noiseless;
  for (int i = 0; i < seed_count; ++i) {
    config.seeds.push_back(bia::derive_seed(cf.seed, {bia::seed_tag::kSimulate, uint64_t(i)}));
  }
  const auto curve = bia::simulate_rates(config);

  std::ostringstream csv;
  csv << "snr_db,user,rate,sum_rate\n";
  for (const auto& pt : curve.points) {
    for (size_t u = 0; u < pt.per_user.size(); ++u) {
      csv << format_double(pt.snr_db) << "," << u + 1 << "," << format_double(pt.per_user[u])
          << "," << format_double(pt.sum_rate) << "\n";
    }
  }
  if (!curve.points.empty()) emit(out_path, csv.str());

  const auto target = bia::dof_formula(params.users, params.order);
  const double target_f = bia::rat_double(target);
  bia::json payload;
  payload["params"] = bia::params_to_json(params);
  payload["slope_dof"] = curve.slope_dof;
  payload["rank_based"] = curve.rank_based;
  payload["target_dof"] = bia::json{{"num", target.get_num().get_str()},
                                    {"den", target.get_den().get_str()},
                                    {"float", target_f}};
  payload["relative_error"] = std::fabs(curve.slope_dof - target_f) / target_f;

  bia::RunManifest manifest;
  manifest.command = "simulate";
  manifest.flags = flags_json(cf);
  manifest.flags["snr_db"] = snr_spec;
  manifest.flags["trials"] = trials;
  manifest.flags["seeds"] = seed_count;
  manifest.flags["noiseless"] = noiseless;
  manifest.timestamp = bia::iso_timestamp_utc();
  if (!curve.points.empty() && !out_path.empty() && out_path != "-") {
    manifest.outputs[out_path] = "sha256:" + bia::sha256_hex(csv.str());
  }
  const auto doc = bia::wrap_document(manifest, payload);
  emit(summary_path, bia::canonical_dump(doc));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blind interference alignment toolkit"};
  app.require_subcommand(1);

  CommonFlags cf;
  std::string out_path;
  std::string summary_path;
  std::string bundle_path;
  std::string k_spec = "1..100";
  std::string snr_spec = "40,50,60,70,80";
  int seed_count = 1;
  int trials = 4;
  bool floating = false;
  bool exact = false;
  bool noiseless = false;

  auto* construct = app.add_subcommand("construct", "emit basis, precoders and switching plan");
  construct->add_option("--users,-k", cf.users, "user count K")->required();
  construct->add_option("--order,-r", cf.order, "alignment order r (default: optimizer)");
  construct->add_option("--mode", cf.mode, "slot budget: tight|padded")->capture_default_str();
  construct->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run alignment/independence checks");
  verify->add_option("--users,-k", cf.users, "user count K");
  verify->add_option("--order,-r", cf.order, "alignment order r");
  verify->add_option("--mode", cf.mode, "slot budget: tight|padded")->capture_default_str();
  verify->add_option("--bundle", bundle_path, "verify a serialized construction document");
  verify->add_option("--seed", cf.seed, "root seed")->capture_default_str();
  verify->add_option("--seeds", seed_count, "number of channel seeds")->capture_default_str();
  verify->add_flag("--exact", exact, "exact rational arithmetic (default)");
  verify->add_flag("--float", floating, "floating arithmetic (non-authoritative)");
  verify->add_option("--out", out_path, "report path (default stdout)");

  auto* dof = app.add_subcommand("dof", "emit the DoF table CSV");
  dof->add_option("--k", k_spec, "K or K range, e.g. 5 or 1..100")->capture_default_str();
  dof->add_option("--out", out_path, "CSV path (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "rate curves and DoF slope estimate");
  simulate->add_option("--users,-k", cf.users, "user count K")->required();
  simulate->add_option("--order,-r", cf.order, "alignment order r");
  simulate->add_option("--mode", cf.mode, "slot budget: tight|padded")->capture_default_str();
  simulate->add_option("--snr-db", snr_spec, "comma list of SNR points in dB")
      ->capture_default_str();
  simulate->add_option("--trials", trials, "trials per SNR point")->capture_default_str();
  simulate->add_option("--seeds", seed_count, "independent channel streams")
      ->capture_default_str();
  simulate->add_option("--seed", cf.seed, "root seed")->capture_default_str();
  simulate->add_flag("--noiseless", noiseless, "skip rate estimation; rank-based slope");
  simulate->add_option("--out", out_path, "rate curve CSV path");
  simulate->add_option("--summary-out", summary_path, "summary JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(cf, out_path);
    if (verify->parsed()) {
      if (bundle_path.empty() && cf.users == 0) {
        throw bia::Error(bia::ErrorKind::Usage, "verify needs --users or --bundle");
      }
      if (exact && floating) {
        throw bia::Error(bia::ErrorKind::Usage, "--exact and --float are mutually exclusive");
      }
      return run_verify(cf, bundle_path, seed_count, floating, out_path);
    }
    if (dof->parsed()) return run_dof(k_spec, out_path);
    if (simulate->parsed()) {
      return run_simulate(cf, snr_spec, trials, seed_count, noiseless, out_path, summary_path);
    }
  } catch (const bia::Error& e) {
    std::cerr << "bia: " << e.what() << "\n";
    switch (e.kind()) {
      case bia::ErrorKind::Usage:
      case bia::ErrorKind::InfeasibleParams:
      case bia::ErrorKind::Serialization:
        return kExitUsage;
      default:
        return kExitViolation;
    }
  } catch (const std::exception& e) {
    std::cerr << "bia: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
