#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/SparseCore>

#include "rdmap/group_ring.hpp"

namespace rdmap {

// Rapid-decay pair: ||lambda(f)|| <= C ||f||_{l,s} for every finitely
// supported f.
struct RdParams {
  double C;
  double s;

  RdParams(double c, double exponent);
};

// Constants for the built-in groups:
//   free(k):          C = pi / sqrt(6), s = 2 (||lambda(f_n)|| <= (n+1) ||f_n||_2
//                     on spheres, then Cauchy-Schwarz over n);
//   free-abelian(d):  s = d, C = sqrt(sum_{Z^d} (1 + |x|_1)^{-2d}) including a
//                     rigorous tail bound;
//   cyclic(m):        C = sqrt(m), s = 1 (any s > 0 is valid).
RdParams builtin_rd_params(const GroupDescriptor& g);

// sum_{x in Z^d} (1 + |x|_1)^{-2s} truncated at |x|_1 <= cutoff, plus an upper
// bound on the remainder. Valid for s > d/2.
double abelian_weight_sum(int d, double s, std::int64_t cutoff);

using SparseComplexMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

// lambda(f) restricted to span{delta_x : x in ball(radius)}: row x, column y
// holds f(x y^{-1}).
struct CompressionMatrix {
  Length radius = 0;
  std::vector<GroupElement> basis;
  SparseComplexMatrix entries;
};

CompressionMatrix compression_matrix(const GroupRingElement& f, Length radius,
                                     std::uint64_t ball_cap = kDefaultBallCap);

struct PowerIterationOptions {
  int max_iters = 10'000;
  double tol = 1e-10;
  std::uint64_t seed = 0x5eed;
  std::uint64_t ball_cap = kDefaultBallCap;
};

struct LowerEstimate {
  double value = 0.0;
  // Largest ||A v|| / ||v|| seen; a lower bound for the compression norm.
  double compression_norm = 0.0;
  int iterations = 0;
  double achieved_tolerance = 0.0;
  bool converged = true;
  Length radius = 0;
};

// max(||f||_2, largest singular value of the compression), the latter by
// power iteration on A^H A from a seeded start vector. Every iterate yields a
// valid lower bound, so a non-converged run still reports its best value.
// The result is capped at ||f||_1.
LowerEstimate opnorm_lower_estimate(const GroupRingElement& f, Length radius,
                                    const PowerIterationOptions& options = {});
double opnorm_lower(const GroupRingElement& f, Length radius,
                    const PowerIterationOptions& options = {});

// min(||f||_1, C ||f||_{l,s}).
double opnorm_upper(const GroupRingElement& f, const RdParams& rd);

struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
  Length lower_ball_radius = 0;
  int iterations = 0;
  double achieved_tolerance = 0.0;
  bool converged = true;
};

NormBracket opnorm_bracket(const GroupRingElement& f, const RdParams& rd, Length radius,
                           const PowerIterationOptions& options = {});

}  // namespace rdmap
