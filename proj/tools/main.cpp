// dirset: direction sets of finite point clouds, empty caps, and the
// Lipschitz-graph trichotomy. See README.md for the pipeline.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirset/cap_analysis.hpp"
#include "dirset/direction_set.hpp"
#include "dirset/errors.hpp"
#include "dirset/generators.hpp"
#include "dirset/geometry.hpp"
#include "dirset/io.hpp"
#include "dirset/secant.hpp"
#include "dirset/trichotomy.hpp"
#include "dirset/version.hpp"
#include "svg.hpp"

namespace {

using dirset::JsonMeta;

std::string fmt(double v) { return dirset::format_double(v); }

// Depth lists accept "4..12" or "4,7,12".
std::vector<int> parse_depths(const std::string& text) {
  std::vector<int> out;
  const auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    const int lo = std::stoi(text.substr(0, range_pos));
    const int hi = std::stoi(text.substr(range_pos + 2));
    if (hi < lo) throw dirset::BadSpec("--depths: empty range '" + text + "'");
    for (int d = lo; d <= hi; ++d) out.push_back(d);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!tok.empty()) out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw dirset::BadSpec("--depths: no depths in '" + text + "'");
  return out;
}

struct GenOptions {
  std::string kind;
  std::uint64_t seed = 0;
  std::string out;
  std::map<std::string, double> params;  // filled from provided flags
};

struct DirsOptions {
  std::string input;
  std::string out;
  double tol = dirset::kDefaultDedupTol;
  bool oriented = false;
  std::optional<std::uint64_t> pair_budget;
  std::uint64_t seed = 0;
};

struct CapsOptions {
  std::string input;
  std::string out;
  std::string method = "auto";
  std::uint64_t k = 100000;
  std::uint64_t seed = 0;
};

struct CoverOptions {
  std::string input;
  std::string out;
  double eps = 0.0;
  std::optional<double> net_density;
};

struct ClassifyOptions {
  std::string input;
  std::string out;
  double eps_hole = dirset::kDefaultEpsHole;
  double eps_cover = dirset::kDefaultEpsCover;
  double tol = dirset::kDefaultDedupTol;
};

struct SlopesOptions {
  std::string input;
  std::string out;
  double m_bound = 10.0;
  std::optional<double> eps;
};

struct RefineOptions {
  std::string kind;
  std::string depths = "4..12";
  double m_bound = 10.0;
  std::string out;
  std::map<std::string, double> params;
};

struct PlotOptions {
  std::string input;
  std::string out;
};

void run_gen(const GenOptions& opt) {
  dirset::GeneratorSpec spec{opt.kind, opt.params, opt.seed};
  const dirset::PointCloud cloud = dirset::generate(spec);
  dirset::write_points_csv_file(opt.out, cloud);
  std::cout << "wrote " << cloud.size() << " points (dim " << cloud.dim() << ") to " << opt.out
            << "\n";
}

JsonMeta dirs_meta(const DirsOptions& opt) {
  JsonMeta meta;
  meta.config_echo = {
      {"subcommand", "dirs"},
      {"input", opt.input},
      {"tol", fmt(opt.tol)},
      {"oriented", opt.oriented ? "true" : "false"},
      {"pair_budget", opt.pair_budget ? std::to_string(*opt.pair_budget) : "none"},
      {"seed", std::to_string(opt.seed)},
  };
  return meta;
}

void run_dirs(const DirsOptions& opt, int threads) {
  const dirset::PointCloud cloud = dirset::read_points_csv_file(opt.input);
  const dirset::DirectionSet ds = dirset::unoriented_directions(
      cloud, opt.tol, opt.pair_budget, opt.seed, opt.oriented, threads);
  dirset::write_text_file(opt.out, dirset::direction_set_to_json(ds, dirs_meta(opt)));
  std::cout << "directions: " << ds.projective.size() << " projective classes from "
            << ds.pairs_examined << " pairs (" << ds.skipped_coincident
            << " coincident skipped) -> " << opt.out << "\n";
}

void run_caps(const CapsOptions& opt, int threads) {
  const dirset::DirectionSet ds = dirset::direction_set_from_json_file(opt.input);
  dirset::CapSearchOptions search;
  search.force_sampled = opt.method == "sampled";
  search.sample_count = opt.k;
  search.seed = opt.seed;
  const dirset::CapReport cap = dirset::largest_empty_cap(ds.projective, ds.dim, search, threads);

  JsonMeta meta;
  meta.config_echo = {
      {"subcommand", "caps"}, {"input", opt.input},          {"method", opt.method},
      {"k", std::to_string(opt.k)},  {"seed", std::to_string(opt.seed)},
  };
  dirset::write_text_file(opt.out, dirset::cap_report_to_json(cap, ds.dim, meta));

  std::cout << "largest empty cap: radius " << fmt(cap.radius) << " ("
            << dirset::to_string(cap.method) << ", " << dirset::to_string(cap.quality) << ")\n";
  nlohmann::ordered_json line;
  line["kind"] = "cap_report";
  line["radius"] = cap.radius;
  line["method"] = dirset::to_string(cap.method);
  line["quality"] = dirset::to_string(cap.quality);
  std::cout << line.dump() << "\n";
}

void run_cover(const CoverOptions& opt, int threads) {
  const dirset::DirectionSet ds = dirset::direction_set_from_json_file(opt.input);
  const dirset::CoverageCertificate cert =
      dirset::eps_cover_test(ds.projective, ds.dim, opt.eps, opt.net_density, threads);

  JsonMeta meta;
  meta.config_echo = {
      {"subcommand", "cover"},
      {"input", opt.input},
      {"eps", fmt(opt.eps)},
      {"net_density", fmt(cert.net_density)},
  };
  dirset::write_text_file(opt.out, dirset::coverage_to_json(cert, ds.dim, meta));

  std::cout << "eps-cover at " << fmt(opt.eps) << ": "
            << (cert.covered ? "covered" : "not covered") << " (net " << cert.net_size
            << " points, density " << fmt(cert.net_density) << ")\n";
  nlohmann::ordered_json line;
  line["kind"] = "coverage_certificate";
  line["eps"] = cert.eps;
  line["covered"] = cert.covered;
  line["net_size"] = cert.net_size;
  std::cout << line.dump() << "\n";
}

void run_classify(const ClassifyOptions& opt, int threads) {
  const dirset::PointCloud cloud = dirset::read_points_csv_file(opt.input);
  const dirset::Classification c =
      dirset::classify(cloud, opt.eps_hole, opt.eps_cover, opt.tol, threads);

  JsonMeta meta;
  meta.config_echo = {
      {"subcommand", "classify"},  {"input", opt.input},
      {"eps_hole", fmt(opt.eps_hole)}, {"eps_cover", fmt(opt.eps_cover)},
      {"tol", fmt(opt.tol)},
  };
  dirset::write_text_file(
      opt.out, dirset::classification_to_json(c, meta, 10000, opt.out + ".witness.csv"));

  std::cout << "verdict: " << dirset::to_string(c.verdict);
  if (c.verdict == dirset::Verdict::class_i) {
    std::cout << " (Lipschitz graph, constant " << fmt(c.witness->lipschitz_constant)
              << " <= bound " << fmt(c.witness->bound) << ")";
  } else if (c.verdict == dirset::Verdict::class_iii) {
    std::cout << " (all directions at eps_cover " << fmt(c.eps_cover) << ")";
  } else {
    std::cout << " (middle regime: cap radius " << fmt(c.refinement->cap_radius)
              << ", coverage " << fmt(c.refinement->coverage) << ")";
  }
  std::cout << "\n";
  nlohmann::ordered_json line;
  line["kind"] = "classification";
  line["verdict"] = dirset::to_string(c.verdict);
  line["cap_radius"] = c.cap.radius;
  std::cout << line.dump() << "\n";
}

void run_slopes(const SlopesOptions& opt, int threads) {
  const dirset::PointCloud cloud = dirset::read_points_csv_file(opt.input);
  if (cloud.dim() != 2) {
    throw dirset::DimensionMismatch("slopes: input must be a d=2 graph sample");
  }
  std::vector<std::pair<double, double>> rows(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    rows[i] = {cloud.point(i)[0], cloud.point(i)[1]};
  }
  std::sort(rows.begin(), rows.end());
  std::vector<double> xs(rows.size()), ys(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    xs[i] = rows[i].first;
    ys[i] = rows[i].second;
  }
  const dirset::SlopeSet slopes = dirset::secant_slopes(xs, ys, threads);
  std::ofstream out(opt.out);
  if (!out) throw dirset::ParseError("cannot open '" + opt.out + "' for writing");
  dirset::write_slopes_csv(out, slopes);

  const dirset::SlopeHull hull = dirset::slope_connected_hull(slopes);
  const double fill = dirset::min_fill_eps(slopes, opt.m_bound);
  std::cout << "slopes: " << slopes.slopes.size() << " in [" << fmt(hull.lo) << ", "
            << fmt(hull.hi) << "], largest internal gap " << fmt(hull.largest_internal_gap)
            << ", fill eps over [-" << fmt(opt.m_bound) << ", " << fmt(opt.m_bound) << "] = "
            << fmt(fill) << "\n";
  nlohmann::ordered_json line;
  line["kind"] = "slope_summary";
  line["count"] = slopes.slopes.size();
  line["min"] = hull.lo;
  line["max"] = hull.hi;
  line["largest_internal_gap"] = hull.largest_internal_gap;
  line["M"] = opt.m_bound;
  line["fill_eps"] = fill;
  if (opt.eps) {
    const dirset::SlopeFillResult res = dirset::slope_fill_test(slopes, opt.m_bound, *opt.eps);
    line["eps"] = *opt.eps;
    line["filled"] = res.filled;
    if (!res.filled) line["witness"] = res.witness;
    std::cout << (res.filled ? "filled" : "gap") << " at eps " << fmt(*opt.eps);
    if (!res.filled) std::cout << ", witness slope " << fmt(res.witness);
    std::cout << "\n";
  }
  std::cout << line.dump() << "\n";
}

void run_refine(const RefineOptions& opt, int threads) {
  const std::vector<int> depths = parse_depths(opt.depths);
  const dirset::ScalarFunctionSpec fgen{opt.kind, opt.params};
  const std::vector<dirset::RefinementRow> rows =
      dirset::refinement_study(fgen, depths, opt.m_bound, threads);
  std::ofstream out(opt.out);
  if (!out) throw dirset::ParseError("cannot open '" + opt.out + "' for writing");
  dirset::write_refinement_csv(out, rows);
  for (const auto& r : rows) {
    std::cout << "depth " << r.depth << ": n " << r.n << ", max|slope| " << fmt(r.max_abs_slope)
              << ", fill_eps " << fmt(r.fill_eps) << "\n";
  }
}

void run_plot(const PlotOptions& opt) {
  std::string body;
  if (opt.input.size() > 4 && opt.input.substr(opt.input.size() - 4) == ".csv") {
    body = dirset::svg::render_slope_histogram(dirset::read_slopes_csv_file(opt.input));
  } else {
    const std::string text = dirset::read_text_file(opt.input);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
      throw dirset::ParseError(std::string("plot input: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "direction_set") {
      const dirset::DirectionSet ds = dirset::direction_set_from_json(text);
      if (ds.dim == 2) {
        const dirset::CapReport cap = ds.projective.empty()
                                          ? dirset::CapReport{}
                                          : dirset::largest_empty_arc(ds.projective);
        body = dirset::svg::render_rp1_ring(ds.projective,
                                            ds.projective.empty() ? nullptr : &cap);
      } else if (ds.dim == 3) {
        body = dirset::svg::render_sphere_scatter(ds.projective, nullptr);
      } else {
        throw dirset::DimensionMismatch("plot: direction sets render only for d = 2 or 3");
      }
    } else if (kind == "cap_report") {
      const dirset::CapReport cap = dirset::cap_report_from_json(text);
      const std::vector<dirset::ProjectiveDirection> none;
      if (cap.center.dim() == 2) {
        body = dirset::svg::render_rp1_ring(none, &cap);
      } else if (cap.center.dim() == 3) {
        body = dirset::svg::render_sphere_scatter(none, &cap);
      } else {
        throw dirset::DimensionMismatch("plot: cap reports render only for d = 2 or 3");
      }
    } else {
      throw dirset::ParseError("plot: unrecognized input kind '" + kind + "'");
    }
  }
  dirset::write_text_file(opt.out, body);
  std::cout << "wrote " << opt.out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"direction sets, empty caps, and the Lipschitz-graph trichotomy"};
  app.set_version_flag("--version", std::string(dirset::kToolVersion));
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads (0 = auto); never changes any output byte");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a fixture cloud as CSV");
  gen_cmd->add_option("kind", gen.kind, "generator kind")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "output points csv")->required();
  // Superset of per-kind parameters; the generator validates the selection.
  std::map<std::string, double> gen_flags;
  for (const char* name : {"n", "k", "dim", "depth", "grid", "C", "a", "b", "w1", "w2", "slope"}) {
    gen_cmd->add_option("--" + std::string(name), gen_flags[name]);
  }

  DirsOptions dirs;
  CLI::App* dirs_cmd = app.add_subcommand("dirs", "compute the direction set of a cloud");
  dirs_cmd->add_option("input", dirs.input, "points csv")->required();
  dirs_cmd->add_option("--tol", dirs.tol, "dedup tolerance in radians");
  dirs_cmd->add_flag("--oriented", dirs.oriented, "include the oriented list in the output");
  std::uint64_t budget_flag = 0;
  CLI::Option* budget_opt =
      dirs_cmd->add_option("--pair-budget", budget_flag, "sample this many pairs (default: all)");
  dirs_cmd->add_option("--seed", dirs.seed, "seed for pair sampling");
  dirs_cmd->add_option("--out", dirs.out, "output json")->required();

  CapsOptions caps;
  CLI::App* caps_cmd = app.add_subcommand("caps", "largest direction-free cap");
  caps_cmd->add_option("input", caps.input, "direction set json")->required();
  caps_cmd->add_option("--method", caps.method, "auto|sampled")
      ->check(CLI::IsMember({"auto", "sampled"}));
  caps_cmd->add_option("--k", caps.k, "sampled candidate count");
  caps_cmd->add_option("--seed", caps.seed, "sampled candidate seed");
  caps_cmd->add_option("--out", caps.out, "output json")->required();

  CoverOptions cover;
  CLI::App* cover_cmd = app.add_subcommand("cover", "eps-coverage certificate");
  cover_cmd->add_option("input", cover.input, "direction set json")->required();
  cover_cmd->add_option("--eps", cover.eps, "coverage tolerance in radians")->required();
  double net_density_flag = 0.0;
  CLI::Option* density_opt = cover_cmd->add_option("--net-density", net_density_flag,
                                                   "net covering radius (default eps/4)");
  cover_cmd->add_option("--out", cover.out, "output json")->required();

  ClassifyOptions classify;
  CLI::App* classify_cmd = app.add_subcommand("classify", "trichotomy verdict for a cloud");
  classify_cmd->add_option("input", classify.input, "points csv")->required();
  classify_cmd->add_option("--eps-hole", classify.eps_hole, "class i cap threshold");
  classify_cmd->add_option("--eps-cover", classify.eps_cover, "class iii cover threshold");
  classify_cmd->add_option("--tol", classify.tol, "direction dedup tolerance");
  classify_cmd->add_option("--out", classify.out, "output json")->required();

  SlopesOptions slopes;
  CLI::App* slopes_cmd = app.add_subcommand("slopes", "secant slopes of a d=2 graph sample");
  slopes_cmd->add_option("input", slopes.input, "points csv (d=2)")->required();
  slopes_cmd->add_option("--M", slopes.m_bound, "fill interval half-width");
  double eps_flag = 0.0;
  CLI::Option* eps_opt = slopes_cmd->add_option("--eps", eps_flag, "fill test tolerance");
  slopes_cmd->add_option("--out", slopes.out, "output slopes csv")->required();

  RefineOptions refine;
  CLI::App* refine_cmd = app.add_subcommand("refine", "dyadic refinement table for a function");
  refine_cmd->add_option("kind", refine.kind, "line|absolute_value|weierstrass|cantor")
      ->required();
  refine_cmd->add_option("--depths", refine.depths, "range like 4..12 or a comma list");
  refine_cmd->add_option("--M", refine.m_bound, "fill interval half-width");
  refine_cmd->add_option("--out", refine.out, "output table csv")->required();
  std::map<std::string, double> refine_flags;
  for (const char* name : {"a", "b", "slope"}) {
    refine_cmd->add_option("--" + std::string(name), refine_flags[name]);
  }

  PlotOptions plot;
  CLI::App* plot_cmd = app.add_subcommand("plot", "render dirs.json, cap.json or slopes.csv");
  plot_cmd->add_option("input", plot.input, "input file")->required();
  plot_cmd->add_option("--out", plot.out, "output svg")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);  // prints usage to stderr
    return 2;
  }

  try {
    if (*gen_cmd) {
      for (const auto& [name, value] : gen_flags) {
        if (gen_cmd->count("--" + name) > 0) gen.params[name] = value;
      }
      run_gen(gen);
    } else if (*dirs_cmd) {
      if (*budget_opt) dirs.pair_budget = budget_flag;
      run_dirs(dirs, threads);
    } else if (*caps_cmd) {
      run_caps(caps, threads);
    } else if (*cover_cmd) {
      if (*density_opt) cover.net_density = net_density_flag;
      run_cover(cover, threads);
    } else if (*classify_cmd) {
      run_classify(classify, threads);
    } else if (*slopes_cmd) {
      if (*eps_opt) slopes.eps = eps_flag;
      run_slopes(slopes, threads);
    } else if (*refine_cmd) {
      for (const auto& [name, value] : refine_flags) {
        if (refine_cmd->count("--" + name) > 0) refine.params[name] = value;
      }
      run_refine(refine, threads);
    } else if (*plot_cmd) {
      run_plot(plot);
    }
  } catch (const dirset::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const dirset::NotAGraph& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const dirset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
