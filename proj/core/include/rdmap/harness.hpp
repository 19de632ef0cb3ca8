#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rdmap/multiplier.hpp"
#include "rdmap/norm.hpp"
#include "rdmap/random.hpp"

namespace rdmap {

// (r, n) sweep for the convergence experiment. r decreases strictly; n is a
// function of r and only enters through the tail bound, so it may be huge.
struct GridSchedule {
  std::vector<double> r_values;
  std::function<Length(double)> n_rule;
  RdParams rd;

  // r in {0.5, 0.1, 0.02}, n(r) = ceil(40 s / r).
  static GridSchedule standard(const RdParams& rd);
  static std::function<Length(double)> default_n_rule(double s);

  // Throws std::invalid_argument unless r is positive and strictly decreasing
  // and n(r) >= s/r - 1 (the tail bound is then in its decreasing regime).
  void validate() const;
};

struct ConvergenceRow {
  double r = 0.0;
  Length n = 0;
  double U = 1.0;
  double K_n = 0.0;
  double defect_lower = 0.0;
  double defect_upper = 0.0;
  double runtime_ms = 0.0;
};

struct GridOptions {
  Length radius = 6;
  PowerIterationOptions power;
  // Wall-clock times are not reproducible; rows carry 0 unless enabled.
  bool record_timing = false;
};

std::vector<ConvergenceRow> run_grid(const GroupRingElement& f, const GridSchedule& schedule,
                                     const GridOptions& options = {});

// Index of the first row with defect_upper < epsilon. Throws on empty rows.
std::optional<std::size_t> select_epsilon(const std::vector<ConvergenceRow>& rows,
                                          double epsilon);

// Sampling pools for random elements: ball radius and the lower-bound
// compression radius used by the sampled soundness checks.
struct SampleOptions {
  std::size_t count = 200;
  std::uint64_t seed = 42;
  Length max_length = 3;
  std::size_t max_terms = 6;
  Length radius = 5;
  double slack = 1e-9;
  PowerIterationOptions power;
};

SampleOptions default_sample_options(const GroupDescriptor& g);

struct RdSampleRecord {
  double lower = 0.0;
  double sobolev = 0.0;
  double ratio = 0.0;  // lower / (C * sobolev)
  bool passed = true;
};

struct RdSampleReport {
  RdParams rd;
  std::vector<RdSampleRecord> records;
  bool passed = true;
  double max_ratio = 0.0;
  std::size_t worst_index = 0;
  std::optional<GroupRingElement> worst_element;
};

// Checks opnorm_lower(f) <= C ||f||_{l,s} + slack on seeded random elements.
RdSampleReport rd_sample(const GroupDescriptor& g, const RdParams& rd,
                         const SampleOptions& options);

struct LemmaSampleRecord {
  double lower = 0.0;  // opnorm_lower(phi . f)
  double bound = 0.0;  // C K opnorm_upper(f)
  bool passed = true;
};

struct LemmaSampleReport {
  std::vector<LemmaSampleRecord> records;
  bool passed = true;
  double max_ratio = 0.0;
};

// Checks opnorm_lower(phi . f) <= C K opnorm_upper(f) + slack on seeded random
// pairs; phi cycles through table, heat, truncated and scaled kinds.
LemmaSampleReport lemma_sample(const GroupDescriptor& g, const RdParams& rd,
                               const SampleOptions& options);

// Random multiplier of the given kind index (0 table, 1 heat, 2 truncated,
// 3 scaled).
Multiplier random_multiplier(const GroupDescriptor& g, Rng& rng, int kind, Length max_length);

}  // namespace rdmap
