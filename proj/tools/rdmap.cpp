#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdmap/errors.hpp"
#include "rdmap/harness.hpp"
#include "rdmap/io.hpp"
#include "rdmap/kernel.hpp"

namespace {

using namespace rdmap;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitCap = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "json";
  std::string out;
  std::uint64_t ball_cap = kDefaultBallCap;
  double tol = kDefaultSpectralTolerance;
};

void emit(const Common& common, const std::string& body) {
  if (common.out.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream os(common.out, std::ios::binary | std::ios::trunc);
  os << body;
  if (!os) throw std::runtime_error("cannot write " + common.out);
}

void emit(const Common& common, const Json& j) { emit(common, j.dump(2) + "\n"); }

RdParams resolve_rd(const GroupDescriptor& g, std::optional<double> C, std::optional<double> s) {
  if (!C && !s) return builtin_rd_params(g);
  if (!C) throw UsageError("--s requires --C");
  return RdParams(*C, s ? *s : builtin_rd_params(g).s);
}

GroupDescriptor require_group(const std::optional<std::string>& text) {
  if (!text) throw UsageError("--group is required");
  return GroupDescriptor::parse(*text);
}

struct CheckCn {
  std::optional<std::string> group;
  Length radius = 2;
  std::optional<std::string> kernel;

  int run(const Common& common) const {
    Json j;
    CnVerdict verdict;
    if (kernel) {
      if (group) throw UsageError("--kernel and --group are exclusive");
      const KernelMatrix k = io::kernel_from_json(io::load_json(*kernel));
      verdict = cn_check(k.entries, common.tol);
      if (k.group) j["group"] = io::to_json(*k.group);
      j["points"] = k.size();
    } else {
      const auto g = require_group(group);
      const auto points = ball(g, radius, common.ball_cap);
      verdict = cn_check(g, points, common.tol);
      j["group"] = io::to_json(g);
      j["radius"] = radius;
      j["points"] = points.size();
    }
    j["tol"] = common.tol;
    j["verdict"] = io::to_json(verdict);
    emit(common, j);
    return verdict.passed ? kExitOk : kExitMath;
  }
};

struct CheckPd {
  std::optional<std::string> group;
  Length radius = 2;
  std::vector<double> r;

  int run(const Common& common) const {
    const auto g = require_group(group);
    if (r.empty()) throw UsageError("--r is required");
    const auto points = ball(g, radius, common.ball_cap);
    Json results = Json::array();
    bool all = true;
    for (double ri : r) {
      if (!(ri > 0.0)) throw UsageError("--r values must be positive");
      const auto v = psd_check(schoenberg_kernel(g, points, ri), common.tol);
      all = all && v.passed;
      Json item = io::to_json(v);
      item["r"] = ri;
      results.push_back(std::move(item));
    }
    emit(common, Json{{"group", io::to_json(g)},
                      {"radius", radius},
                      {"points", points.size()},
                      {"tol", common.tol},
                      {"passed", all},
                      {"results", std::move(results)}});
    return all ? kExitOk : kExitMath;
  }
};

struct Norm {
  std::string element;
  Length radius = 6;
  std::optional<double> C;
  std::optional<double> s;

  int run(const Common& common) const {
    const auto f = io::ring_element_from_json(io::load_json(element));
    const auto rd = resolve_rd(f.group(), C, s);
    PowerIterationOptions power;
    power.ball_cap = common.ball_cap;
    const auto bracket = opnorm_bracket(f, rd, radius, power);
    emit(common, Json{{"group", io::to_json(f.group())},
                      {"support_size", f.support_size()},
                      {"rd", io::to_json(rd)},
                      {"radius", radius},
                      {"ball_size", ball_size(f.group(), radius)},
                      {"bracket", io::to_json(bracket)}});
    return kExitOk;
  }
};

struct RdSample {
  std::optional<std::string> group;
  std::size_t count = 200;
  std::optional<std::uint64_t> seed;
  std::optional<double> C;
  std::optional<double> s;
  std::optional<Length> radius;

  int run(const Common& common) const {
    const auto g = require_group(group);
    if (!seed) throw UsageError("--seed is required for sampling");
    if (count == 0) throw UsageError("--count must be positive");
    auto options = default_sample_options(g);
    options.count = count;
    options.seed = *seed;
    options.power.ball_cap = common.ball_cap;
    if (radius) options.radius = *radius;
    const auto report = rd_sample(g, resolve_rd(g, C, s), options);
    emit(common, io::to_json(report, g));
    if (!report.passed) {
      std::cerr << "rd-sample: bound violated, worst ratio " << io::format_double(report.max_ratio)
                << " at sample " << report.worst_index << ": "
                << io::terms_to_json(*report.worst_element).dump() << "\n";
      return kExitMath;
    }
    return kExitOk;
  }
};

struct MapConverge {
  std::string element;
  std::optional<double> epsilon;
  std::vector<double> r;
  Length radius = 6;
  std::optional<double> C;
  std::optional<double> s;
  bool timing = false;

  int run(const Common& common) const {
    if (!epsilon) throw UsageError("--epsilon is required");
    const auto f = io::ring_element_from_json(io::load_json(element));
    auto schedule = GridSchedule::standard(resolve_rd(f.group(), C, s));
    if (!r.empty()) schedule.r_values = r;
    try {
      schedule.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    GridOptions options;
    options.radius = radius;
    options.power.ball_cap = common.ball_cap;
    options.record_timing = timing;
    const auto rows = run_grid(f, schedule, options);
    const auto pick = select_epsilon(rows, *epsilon);

    if (common.format == "csv") {
      emit(common, io::to_csv(rows));
    } else {
      emit(common, Json{{"group", io::to_json(f.group())},
                        {"rd", io::to_json(schedule.rd)},
                        {"radius", radius},
                        {"epsilon", *epsilon},
                        {"rows", io::to_json(rows)},
                        {"selected", pick ? Json(*pick) : Json("none")}});
    }
    if (!pick) {
      std::cerr << "map-converge: no row with defect_upper < " << io::format_double(*epsilon)
                << "\n";
      return kExitMath;
    }
    if (common.format == "csv") {
      std::cerr << "map-converge: selected row " << *pick << " (r = "
                << io::format_double(rows[*pick].r) << ")\n";
    }
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for rapid decay, conditionally negative lengths and the "
               "heat-multiplier approximation scheme"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rdmap 0.1.0");

  Common common;
  const auto add_common = [&](CLI::App* sub, bool csv) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember(csv ? std::vector<std::string>{"json", "csv"}
                                  : std::vector<std::string>{"json"}));
    sub->add_option("--out", common.out, "Write output to this path instead of stdout");
    sub->add_option("--ball-cap", common.ball_cap, "Largest ball that may be enumerated")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", common.tol, "Spectral tolerance")->check(CLI::PositiveNumber);
  };

  CheckCn cn;
  auto* cn_cmd = app.add_subcommand("check-cn", "Conditional negativity of word length on a ball");
  cn_cmd->add_option("--group", cn.group, "free(k) | free-abelian(d) | cyclic(m)");
  cn_cmd->add_option("--radius", cn.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  cn_cmd->add_option("--kernel", cn.kernel, "Kernel matrix JSON (path or inline)");
  add_common(cn_cmd, false);

  CheckPd pd;
  auto* pd_cmd = app.add_subcommand("check-pd", "Positive definiteness of exp(-r length)");
  pd_cmd->add_option("--group", pd.group, "Group descriptor");
  pd_cmd->add_option("--radius", pd.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  pd_cmd->add_option("--r", pd.r, "Heat parameters")->delimiter(',');
  add_common(pd_cmd, false);

  Norm norm;
  auto* norm_cmd = app.add_subcommand("norm", "Bracket the operator norm of a group-ring element");
  norm_cmd->add_option("--element", norm.element, "Element JSON (path or inline)")->required();
  norm_cmd->add_option("--radius", norm.radius, "Compression radius")
      ->check(CLI::NonNegativeNumber);
  norm_cmd->add_option("--C", norm.C, "RD constant override")->check(CLI::PositiveNumber);
  norm_cmd->add_option("--s", norm.s, "RD exponent override")->check(CLI::PositiveNumber);
  add_common(norm_cmd, false);

  RdSample rds;
  auto* rds_cmd = app.add_subcommand("rd-sample", "Check the RD inequality on random elements");
  rds_cmd->add_option("--group", rds.group, "Group descriptor");
  rds_cmd->add_option("--count", rds.count, "Number of samples");
  rds_cmd->add_option("--seed", rds.seed, "Sampling seed");
  rds_cmd->add_option("--C", rds.C, "RD constant override")->check(CLI::PositiveNumber);
  rds_cmd->add_option("--s", rds.s, "RD exponent override")->check(CLI::PositiveNumber);
  rds_cmd->add_option("--radius", rds.radius, "Compression radius")
      ->check(CLI::NonNegativeNumber);
  add_common(rds_cmd, false);

  MapConverge map;
  auto* map_cmd = app.add_subcommand("map-converge", "Defect of the scaled heat multipliers");
  map_cmd->add_option("--element", map.element, "Element JSON (path or inline)")->required();
  map_cmd->add_option("--epsilon", map.epsilon, "Target defect")->check(CLI::NonNegativeNumber);
  map_cmd->add_option("--r", map.r, "Strictly decreasing r schedule")->delimiter(',');
  map_cmd->add_option("--radius", map.radius, "Compression radius")
      ->check(CLI::NonNegativeNumber);
  map_cmd->add_option("--C", map.C, "RD constant override")->check(CLI::PositiveNumber);
  map_cmd->add_option("--s", map.s, "RD exponent override")->check(CLI::PositiveNumber);
  map_cmd->add_flag("--timing", map.timing, "Record wall-clock runtime per row");
  add_common(map_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cn_cmd->parsed()) return cn.run(common);
    if (pd_cmd->parsed()) return pd.run(common);
    if (norm_cmd->parsed()) return norm.run(common);
    if (rds_cmd->parsed()) return rds.run(common);
    if (map_cmd->parsed()) return map.run(common);
  } catch (const BallCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
