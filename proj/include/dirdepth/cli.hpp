// Command-line surface: simulate | depth | gldplot | curve | repro.
//
// One run per process. Every stochastic command takes --seed; identical
// invocations produce byte-identical artifacts. Validation problems are
// reported all at once, one "error:" line each, with a nonzero exit status.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirdepth/csv.hpp"
#include "dirdepth/depth.hpp"
#include "dirdepth/gld.hpp"
#include "dirdepth/svg.hpp"
#include "dirdepth/vmf.hpp"

namespace dirdepth::cli {

namespace detail {

inline std::vector<double> parse_number_list(const std::string& text,
                                             char sep = ',') {
  std::vector<double> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, sep)) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &consumed);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse number '" + field + "' in '" + text +
                            "'");
    }
    if (consumed != field.size())
      throw InvalidArgument("trailing characters in '" + field + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty number list '" + text + "'");
  return out;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

// Angular cap radius (radians) equivalent to a given delta; inverse of
// cap_radius_from_angle.
inline double angle_from_cap_radius(DistanceKind kind, double delta) {
  switch (kind) {
    case DistanceKind::Arc:
      return delta;
    case DistanceKind::Cosine:
      return std::acos(1.0 - delta);
    case DistanceKind::Chord:
      return std::acos(1.0 - 0.5 * delta * delta);
  }
  throw InvalidArgument("unknown distance kind");
}

}  // namespace detail

// Where a command's sample comes from: an input file xor a generator.
struct SourceOptions {
  std::string in_path;
  std::string in_latlon_path;
  std::string gen;  // vmf | mixture | uniform
  int q = 0;
  double kappa = -1.0;
  std::string mu;         // comma-separated coordinates
  double mu_angle = std::numeric_limits<double>::quiet_NaN();
  std::string mus;        // ';'-separated coordinate lists (mixture)
  std::string mu_angles;  // comma-separated angles (circular mixture)
  std::string kappas;     // comma-separated concentrations (mixture)
  std::string weights;    // comma-separated weights (mixture)
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

inline void add_source_flags(CLI::App* cmd, SourceOptions* src) {
  cmd->add_option("--in", src->in_path,
                  "input unit-vector CSV (header x1,...,xq)");
  cmd->add_option("--in-latlon", src->in_latlon_path,
                  "input lat/lon CSV in degrees (header lat,lon)");
  cmd->add_option("--gen", src->gen, "generator: vmf, mixture or uniform");
  cmd->add_option("--q", src->q, "dimension of the ambient space");
  cmd->add_option("--kappa", src->kappa, "vMF concentration");
  cmd->add_option("--mu", src->mu,
                  "vMF mean direction, comma-separated coordinates");
  cmd->add_option("--mu-angle", src->mu_angle,
                  "vMF mean direction as an angle in radians (q = 2)");
  cmd->add_option("--mus", src->mus,
                  "mixture mean directions, ';'-separated coordinate lists");
  cmd->add_option("--mu-angles", src->mu_angles,
                  "mixture mean directions as angles in radians (q = 2)");
  cmd->add_option("--kappas", src->kappas,
                  "mixture concentrations, comma-separated");
  cmd->add_option("--weights", src->weights, "mixture weights, comma-separated");
  cmd->add_option("--n", src->n, "number of points to generate");
  cmd->add_option("--seed", src->seed, "random seed (u64)");
}

namespace detail {

inline UnitVector mean_direction_from(const std::string& mu_text,
                                      double mu_angle, int q) {
  if (!mu_text.empty()) return normalize(parse_number_list(mu_text));
  if (!std::isnan(mu_angle)) return from_angle(mu_angle);
  if (q < 2)
    throw InvalidArgument("need --mu, --mu-angle, or --q to fix the dimension");
  std::vector<double> e1(static_cast<std::size_t>(q), 0.0);
  e1[0] = 1.0;
  return UnitVector(std::move(e1));
}

inline MixtureParams mixture_from(const SourceOptions& src) {
  std::vector<UnitVector> mus;
  if (!src.mus.empty()) {
    for (const std::string& part : split(src.mus, ';'))
      mus.push_back(normalize(parse_number_list(part)));
  } else if (!src.mu_angles.empty()) {
    for (double a : parse_number_list(src.mu_angles))
      mus.push_back(from_angle(a));
  } else {
    throw InvalidArgument("mixture generator needs --mus or --mu-angles");
  }
  if (src.kappas.empty())
    throw InvalidArgument("mixture generator needs --kappas");
  const std::vector<double> kappas = parse_number_list(src.kappas);
  if (kappas.size() != mus.size())
    throw InvalidArgument("got " + std::to_string(mus.size()) +
                          " mean directions but " +
                          std::to_string(kappas.size()) + " concentrations");
  std::vector<double> weights;
  if (src.weights.empty())
    weights.assign(mus.size(), 1.0 / static_cast<double>(mus.size()));
  else
    weights = parse_number_list(src.weights);
  std::vector<VmfParams> comps;
  for (std::size_t k = 0; k < mus.size(); ++k)
    comps.emplace_back(std::move(mus[k]), kappas[k]);
  return MixtureParams(std::move(comps), std::move(weights));
}

}  // namespace detail

// Collects configuration complaints instead of stopping at the first one.
inline void validate_source(const SourceOptions& src,
                            std::vector<std::string>* errors) {
  const int inputs = (src.in_path.empty() ? 0 : 1) +
                     (src.in_latlon_path.empty() ? 0 : 1) +
                     (src.gen.empty() ? 0 : 1);
  if (inputs == 0)
    errors->push_back("no input: give --in, --in-latlon, or --gen");
  if (inputs > 1)
    errors->push_back("--in, --in-latlon and --gen are mutually exclusive");
  if (!src.gen.empty()) {
    if (src.gen != "vmf" && src.gen != "mixture" && src.gen != "uniform")
      errors->push_back("unknown generator '" + src.gen +
                        "' (expected vmf, mixture or uniform)");
    if (src.n == 0) errors->push_back("generator needs --n >= 1");
    if (src.gen == "vmf" && src.kappa < 0.0)
      errors->push_back("vmf generator needs --kappa >= 0");
    if (src.gen == "uniform" && src.q < 2)
      errors->push_back("uniform generator needs --q >= 2");
  }
}

inline DirectionalSample load_sample(const SourceOptions& src) {
  if (!src.in_path.empty()) return parse_unit_csv(src.in_path);
  if (!src.in_latlon_path.empty()) return parse_latlon_csv(src.in_latlon_path);
  if (src.gen == "uniform") return sample_uniform(src.q, src.n, src.seed);
  if (src.gen == "mixture")
    return sample_mixture(detail::mixture_from(src), src.n, src.seed);
  const UnitVector mu = detail::mean_direction_from(src.mu, src.mu_angle, src.q);
  if (src.q >= 2 && mu.dim() != src.q)
    throw InvalidArgument("--q " + std::to_string(src.q) +
                          " conflicts with a mean direction of dimension " +
                          std::to_string(mu.dim()));
  return sample_vmf(VmfParams(mu, src.kappa), src.n, src.seed);
}

struct DepthOptions {
  std::string dist = "cosine";
  double delta = std::numeric_limits<double>::quiet_NaN();
  double cap_angle_deg = std::numeric_limits<double>::quiet_NaN();
  bool leave_one_out = false;
};

inline void add_depth_flags(CLI::App* cmd, DepthOptions* opt) {
  cmd->add_option("--dist", opt->dist, "distance: arc, cosine or chord")
      ->default_str("cosine");
  cmd->add_option("--delta", opt->delta, "locality radius in distance units");
  cmd->add_option("--cap-angle", opt->cap_angle_deg,
                  "locality radius as a cap angle in degrees");
  cmd->add_flag("--leave-one-out", opt->leave_one_out,
                "score each sample point against the other n-1 points");
}

inline void validate_depth(const DepthOptions& opt, bool delta_required,
                           std::vector<std::string>* errors) {
  try {
    distance_kind_from_string(opt.dist);
  } catch (const Error& e) {
    errors->push_back(e.what());
  }
  const bool has_delta = !std::isnan(opt.delta);
  const bool has_angle = !std::isnan(opt.cap_angle_deg);
  if (has_delta && has_angle)
    errors->push_back("--delta and --cap-angle are mutually exclusive");
  if (delta_required && !has_delta && !has_angle)
    errors->push_back("a locality radius is required: give --delta or --cap-angle");
}

// Resolved locality radius, or nullopt when none was requested.
inline std::optional<double> resolve_delta(const DepthOptions& opt,
                                           DistanceKind kind) {
  if (!std::isnan(opt.delta)) return opt.delta;
  if (!std::isnan(opt.cap_angle_deg))
    return cap_radius_from_angle(kind, opt.cap_angle_deg * kPi / 180.0);
  return std::nullopt;
}

namespace detail {

inline nlohmann::ordered_json config_json(const SourceOptions& src,
                                          const DepthOptions& opt,
                                          DistanceKind kind, double delta,
                                          std::size_t n, int q) {
  nlohmann::ordered_json j;
  j["dist"] = to_string(kind);
  j["delta"] = delta;
  j["cap_angle_deg"] = angle_from_cap_radius(kind, delta) * 180.0 / kPi;
  j["include_self"] = !opt.leave_one_out;
  j["n"] = n;
  j["q"] = q;
  if (!src.in_path.empty())
    j["source"] = src.in_path;
  else if (!src.in_latlon_path.empty())
    j["source"] = src.in_latlon_path;
  else {
    j["source"] = src.gen;
    j["seed"] = src.seed;
  }
  return j;
}

}  // namespace detail

namespace commands {

inline void simulate(const SourceOptions& src, const std::string& out) {
  const DirectionalSample sample = load_sample(src);
  write_file_atomic(out, sample_to_csv(sample));
}

inline void depth(const SourceOptions& src, const DepthOptions& opt,
                  const std::string& out) {
  const DirectionalSample sample = load_sample(src);
  const DistanceKind kind = distance_kind_from_string(opt.dist);
  DepthConfig config{kind, resolve_delta(opt, kind), !opt.leave_one_out};
  const DepthProfile profile = depth_profile(sample, config);
  const NormalizedDepths g = normalize_depths(profile.global);
  const NormalizedDepths l = normalize_depths(profile.local);
  write_file_atomic(out, profile_to_csv(profile, g.values, l.values));
}

inline void gldplot(const SourceOptions& src, const DepthOptions& opt,
                    const RenderOptions& render, const std::string& svg_out,
                    const std::string& json_out,
                    const std::string& sample_out) {
  const DirectionalSample sample = load_sample(src);
  const DistanceKind kind = distance_kind_from_string(opt.dist);
  DepthConfig config{kind, resolve_delta(opt, kind), !opt.leave_one_out};
  const GldData gld = build_gld(sample, config);
  if (!svg_out.empty()) write_file_atomic(svg_out, render_svg(gld, render));
  if (!json_out.empty()) {
    nlohmann::ordered_json j = gld_to_json(gld);
    j["config"] = detail::config_json(src, opt, kind, *config.delta,
                                      sample.size(), sample.dim());
    write_file_atomic(json_out, j.dump(2) + "\n");
  }
  if (!sample_out.empty()) write_file_atomic(sample_out, sample_to_csv(sample));
}

inline void curve(const SourceOptions& src, const DepthOptions& opt,
                  int grid_size, const std::string& out) {
  const DirectionalSample sample = load_sample(src);
  const DistanceKind kind = distance_kind_from_string(opt.dist);
  const std::optional<double> delta = resolve_delta(opt, kind);
  write_file_atomic(out, curve_to_csv(depth_curve(sample, kind, delta,
                                                  grid_size)));
}

// Regenerates the simulated scenarios: circular depth curves (unimodal,
// asymmetric mixture, 105-degree bimodal, antipodal) and 5-dimensional GLD
// plots (vMF kappa 5 and 20, balanced and 80/20 two-component mixtures) at
// cap angles 45, 60 and 90 degrees. Scenario seeds are base_seed + offset.
inline void repro(const std::filesystem::path& outdir,
                  std::uint64_t base_seed) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);

  const std::array<DistanceKind, 3> kinds = {
      DistanceKind::Arc, DistanceKind::Cosine, DistanceKind::Chord};
  const int grid = 360;

  struct CircularScenario {
    std::string name;
    std::uint64_t seed_offset;
    std::size_t n;
    MixtureParams mixture;
  };
  const std::vector<CircularScenario> circular = {
      {"unimodal", 1, 1000,
       MixtureParams({VmfParams(from_angle(kPi), 2.0)}, {1.0})},
      {"asymmetric", 2, 1000,
       MixtureParams({VmfParams(from_angle(kPi), 0.5),
                      VmfParams(from_angle(1.5 * kPi), 5.0)},
                     {0.5, 0.5})},
      {"bimodal105", 3, 1000,
       MixtureParams({VmfParams(from_angle(0.5 * kPi), 5.0),
                      VmfParams(from_angle(0.5 * kPi + 7.0 * kPi / 12.0), 5.0)},
                     {0.5, 0.5})},
      {"antipodal", 4, 5000,
       MixtureParams({VmfParams(from_angle(0.5 * kPi), 5.0),
                      VmfParams(from_angle(1.5 * kPi), 5.0)},
                     {0.5, 0.5})},
  };
  for (const CircularScenario& sc : circular) {
    const DirectionalSample sample =
        sample_mixture(sc.mixture, sc.n, base_seed + sc.seed_offset);
    write_file_atomic(outdir / ("sample_" + sc.name + ".csv"),
                      sample_to_csv(sample));
    for (DistanceKind kind : kinds) {
      const double delta = cap_radius_from_angle(kind, 0.5 * kPi);
      write_file_atomic(
          outdir / ("curve_" + sc.name + "_" + to_string(kind) + ".csv"),
          curve_to_csv(depth_curve(sample, kind, delta, grid)));
    }
  }

  struct GldScenario {
    std::string name;
    std::uint64_t seed_offset;
    MixtureParams mixture;
  };
  auto e = [](int i) {
    std::vector<double> v(5, 0.0);
    v[static_cast<std::size_t>(i)] = 1.0;
    return UnitVector(std::move(v));
  };
  const std::vector<GldScenario> gld_scenarios = {
      {"vmf_k5", 5, MixtureParams({VmfParams(e(0), 5.0)}, {1.0})},
      {"vmf_k20", 6, MixtureParams({VmfParams(e(0), 20.0)}, {1.0})},
      {"balanced", 7,
       MixtureParams({VmfParams(e(0), 20.0), VmfParams(e(4), 20.0)},
                     {0.5, 0.5})},
      {"unbalanced", 8,
       MixtureParams({VmfParams(e(0), 20.0), VmfParams(e(4), 20.0)},
                     {0.8, 0.2})},
  };
  const std::array<double, 3> cap_angles_deg = {45.0, 60.0, 90.0};
  for (const GldScenario& sc : gld_scenarios) {
    const DirectionalSample sample =
        sample_mixture(sc.mixture, 250, base_seed + sc.seed_offset);
    write_file_atomic(outdir / ("sample_" + sc.name + ".csv"),
                      sample_to_csv(sample));
    for (double angle_deg : cap_angles_deg) {
      const double delta =
          cap_radius_from_angle(DistanceKind::Cosine, angle_deg * kPi / 180.0);
      DepthConfig config{DistanceKind::Cosine, delta, true};
      const GldData gld = build_gld(sample, config);
      const std::string stem =
          "gld_" + sc.name + "_cap" + std::to_string(static_cast<int>(angle_deg));
      write_file_atomic(outdir / (stem + ".svg"),
                        render_svg(gld, RenderOptions{}));
      nlohmann::ordered_json j = gld_to_json(gld);
      j["config"] = {{"dist", "cosine"},
                     {"delta", delta},
                     {"cap_angle_deg", angle_deg},
                     {"include_self", true},
                     {"n", 250},
                     {"q", 5},
                     {"source", "repro:" + sc.name},
                     {"seed", base_seed + sc.seed_offset}};
      write_file_atomic(outdir / (stem + ".json"), j.dump(2) + "\n");
    }
  }
}

}  // namespace commands

inline int run(std::vector<std::string> args) {
  CLI::App app{"distance-based global/local depths and GLD plots for "
               "directional data"};
  app.require_subcommand(1);

  SourceOptions src;
  DepthOptions depth_opt;
  RenderOptions render;
  std::string out;
  std::string svg_out;
  std::string json_out;
  std::string sample_out;
  std::string outdir = "repro";
  int grid_size = 360;
  std::uint64_t repro_seed = 9100;

  CLI::App* sim = app.add_subcommand("simulate",
                                     "draw a sample and write it as CSV");
  add_source_flags(sim, &src);
  sim->add_option("--out", out, "output CSV path")->required();

  CLI::App* dep = app.add_subcommand(
      "depth", "per-point global/local depths as CSV");
  add_source_flags(dep, &src);
  add_depth_flags(dep, &depth_opt);
  dep->add_option("--out", out, "output CSV path")->required();

  CLI::App* gld = app.add_subcommand("gldplot",
                                     "GLD plot as SVG plus a JSON summary");
  add_source_flags(gld, &src);
  add_depth_flags(gld, &depth_opt);
  gld->add_option("--svg", svg_out, "output SVG path");
  gld->add_option("--json", json_out, "output JSON summary path");
  gld->add_option("--sample-out", sample_out, "also write the sample as CSV");
  gld->add_option("--width", render.width, "SVG width in pixels");
  gld->add_option("--height", render.height, "SVG height in pixels");
  gld->add_option("--point-radius", render.point_radius,
                  "data point radius in pixels");
  gld->add_flag("--diagonal", render.show_diagonal,
                "draw the 45-degree reference line");

  CLI::App* cur = app.add_subcommand(
      "curve", "circular depth curve on an equispaced angle grid as CSV");
  add_source_flags(cur, &src);
  add_depth_flags(cur, &depth_opt);
  cur->add_option("--grid", grid_size, "number of grid angles");
  cur->add_option("--out", out, "output CSV path")->required();

  CLI::App* rep = app.add_subcommand(
      "repro", "regenerate the simulated scenarios with pinned seeds");
  rep->add_option("--outdir", outdir, "output directory");
  rep->add_option("--seed", repro_seed, "base seed for the scenario set");

  std::vector<const char*> argv;
  argv.push_back("dirdepth");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::vector<std::string> errors;
    if (sim->parsed()) {
      validate_source(src, &errors);
    } else if (dep->parsed() || cur->parsed() || gld->parsed()) {
      validate_source(src, &errors);
      validate_depth(depth_opt, !cur->parsed(), &errors);
      if (gld->parsed() && svg_out.empty() && json_out.empty())
        errors.push_back("gldplot needs --svg and/or --json");
    }
    if (!errors.empty()) {
      for (const std::string& msg : errors) std::cerr << "error: " << msg << "\n";
      return 1;
    }

    if (sim->parsed()) commands::simulate(src, out);
    if (dep->parsed()) commands::depth(src, depth_opt, out);
    if (gld->parsed())
      commands::gldplot(src, depth_opt, render, svg_out, json_out, sample_out);
    if (cur->parsed()) commands::curve(src, depth_opt, grid_size, out);
    if (rep->parsed()) commands::repro(outdir, repro_seed);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args));
}

}  // namespace dirdepth::cli
