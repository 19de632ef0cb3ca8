#include "rdmap/harness.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rdmap/kernel.hpp"

namespace rdmap {

std::function<Length(double)> GridSchedule::default_n_rule(double s) {
  return [s](double r) { return static_cast<Length>(std::ceil(40.0 * s / r)); };
}

GridSchedule GridSchedule::standard(const RdParams& rd) {
  return {{0.5, 0.1, 0.02}, default_n_rule(rd.s), rd};
}

void GridSchedule::validate() const {
  if (r_values.empty()) throw std::invalid_argument("grid schedule has no r values");
  if (!n_rule) throw std::invalid_argument("grid schedule has no n rule");
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    const double r = r_values[i];
    if (!(r > 0.0)) throw std::invalid_argument("grid r values must be > 0");
    if (i > 0 && !(r < r_values[i - 1])) {
      throw std::invalid_argument("grid r values must be strictly decreasing");
    }
    if (static_cast<double>(n_rule(r)) < rd.s / r - 1.0) {
      throw std::invalid_argument("n(r) must be >= s/r - 1");
    }
  }
}

std::vector<ConvergenceRow> run_grid(const GroupRingElement& f, const GridSchedule& schedule,
                                     const GridOptions& options) {
  schedule.validate();
  std::vector<ConvergenceRow> rows;
  rows.reserve(schedule.r_values.size());
  for (double r : schedule.r_values) {
    const auto start = std::chrono::steady_clock::now();
    ConvergenceRow row;
    row.r = r;
    row.n = schedule.n_rule(r);
    row.K_n = decay_certificate(r, schedule.rd.s).tail(static_cast<double>(row.n));
    row.U = certified_scale(r, schedule.rd.s, row.n, schedule.rd.C);
    const Multiplier rho = Multiplier::scaled(Multiplier::truncated_heat(r, row.n), row.U);
    const DefectReport defect = map_defect(rho, f, schedule.rd, options.radius, options.power);
    row.defect_lower = defect.bracket.lower;
    row.defect_upper = defect.bracket.upper;
    if (options.record_timing) {
      row.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::size_t> select_epsilon(const std::vector<ConvergenceRow>& rows,
                                          double epsilon) {
  if (rows.empty()) throw std::invalid_argument("select_epsilon requires at least one row");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].defect_upper < epsilon) return i;
  }
  return std::nullopt;
}

SampleOptions default_sample_options(const GroupDescriptor& g) {
  SampleOptions options;
  switch (g.kind()) {
    case GroupKind::kFree:
      options.max_length = 3;
      options.radius = 5;
      break;
    case GroupKind::kFreeAbelian:
      options.max_length = 4;
      options.radius = g.parameter() == 1 ? 40 : 8;
      break;
    case GroupKind::kCyclic:
      options.max_length = g.parameter() / 2;
      options.radius = g.parameter() / 2;
      break;
  }
  return options;
}

RdSampleReport rd_sample(const GroupDescriptor& g, const RdParams& rd,
                         const SampleOptions& options) {
  if (options.count == 0) throw std::invalid_argument("sample count must be >= 1");
  RdSampleReport report{rd, {}, true, 0.0, 0, std::nullopt};
  report.records.reserve(options.count);
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.count; ++i) {
    GroupRingElement f = random_element(g, rng, options.max_length, options.max_terms);
    RdSampleRecord rec;
    rec.lower = opnorm_lower(f, options.radius, options.power);
    rec.sobolev = sobolev_norm(f, rd.s);
    const double rhs = rd.C * rec.sobolev;
    rec.ratio = rec.lower / rhs;
    rec.passed = rec.lower <= rhs + options.slack;
    report.passed = report.passed && rec.passed;
    if (i == 0 || rec.ratio > report.max_ratio) {
      report.max_ratio = rec.ratio;
      report.worst_index = i;
      report.worst_element = std::move(f);
    }
    report.records.push_back(rec);
  }
  return report;
}

Multiplier random_multiplier(const GroupDescriptor& g, Rng& rng, int kind, Length max_length) {
  switch (kind) {
    case 0:
      return Multiplier::table(random_element(g, rng, max_length, 8));
    case 1:
      return Multiplier::heat(rng.uniform(0.01, 2.0));
    case 2:
      return Multiplier::truncated_heat(rng.uniform(0.01, 2.0),
                                        static_cast<Length>(rng.below(max_length + 1)));
    default:
      return Multiplier::scaled(
          Multiplier::truncated_heat(rng.uniform(0.01, 2.0),
                                     static_cast<Length>(rng.below(max_length + 1))),
          rng.uniform(1.0, 3.0));
  }
}

LemmaSampleReport lemma_sample(const GroupDescriptor& g, const RdParams& rd,
                               const SampleOptions& options) {
  if (options.count == 0) throw std::invalid_argument("sample count must be >= 1");
  LemmaSampleReport report;
  report.records.reserve(options.count);
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.count; ++i) {
    const Multiplier phi =
        random_multiplier(g, rng, static_cast<int>(i % 4), options.max_length);
    const GroupRingElement f = random_element(g, rng, options.max_length, options.max_terms);
    LemmaSampleRecord rec;
    rec.lower = opnorm_lower(apply(phi, f), options.radius, options.power);
    rec.bound = lemma_norm_bound(phi, g, rd).upper * opnorm_upper(f, rd);
    rec.passed = rec.lower <= rec.bound + options.slack;
    report.passed = report.passed && rec.passed;
    if (rec.bound > 0.0) report.max_ratio = std::max(report.max_ratio, rec.lower / rec.bound);
    report.records.push_back(rec);
  }
  return report;
}

}  // namespace rdmap
