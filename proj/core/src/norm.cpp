#include "rdmap/norm.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "rdmap/random.hpp"

namespace rdmap {

RdParams::RdParams(double c, double exponent) : C(c), s(exponent) {
  if (!(c > 0.0) || !(exponent > 0.0)) {
    throw std::invalid_argument("rapid decay parameters require C > 0 and s > 0");
  }
}

double abelian_weight_sum(int d, double s, std::int64_t cutoff) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(2.0 * s > d)) throw std::invalid_argument("weight sum diverges unless 2s > d");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");

  // log of |{x : |x|_1 = L}| = sum_j 2^j C(d, j) C(L-1, j-1), term by term.
  auto log_binom = [](double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  };
  double total = 0.0;
  for (std::int64_t L = cutoff; L >= 1; --L) {
    const double weight_log = -2.0 * s * std::log1p(static_cast<double>(L));
    double shell = 0.0;
    for (std::int64_t j = 1; j <= std::min<std::int64_t>(d, L); ++j) {
      shell += std::exp(j * std::numbers::ln2 + log_binom(d, j) +
                        log_binom(static_cast<double>(L - 1), static_cast<double>(j - 1)) +
                        weight_log);
    }
    total += shell;
  }
  total += 1.0;

  // |{|x|_1 = L}| <= 2^d C(L+d-1, d-1) <= 2^d (d (L+1))^{d-1} / (d-1)!, so the
  // remainder is at most A * sum_{L > cutoff} (1+L)^{-(2s-d+1)}
  //                  <= A * (cutoff+1)^{-(2s-d)} / (2s-d).
  const double log_a = d * std::numbers::ln2 + (d - 1) * std::log(static_cast<double>(d)) -
                       std::lgamma(static_cast<double>(d));
  const double excess = 2.0 * s - d;
  total += std::exp(log_a - excess * std::log(static_cast<double>(cutoff + 1))) / excess;
  return total;
}

RdParams builtin_rd_params(const GroupDescriptor& g) {
  switch (g.kind()) {
    case GroupKind::kFree:
      return {std::numbers::pi / std::sqrt(6.0), 2.0};
    case GroupKind::kFreeAbelian: {
      static std::mutex mutex;
      static std::map<std::int64_t, double> cache;
      const std::int64_t d = g.parameter();
      std::lock_guard lock(mutex);
      auto it = cache.find(d);
      if (it == cache.end()) {
        const double sum = abelian_weight_sum(static_cast<int>(d), static_cast<double>(d), 1'000'000);
        it = cache.emplace(d, std::sqrt(sum)).first;
      }
      return {it->second, static_cast<double>(d)};
    }
    case GroupKind::kCyclic:
      return {std::sqrt(static_cast<double>(g.parameter())), 1.0};
  }
  throw std::logic_error("unknown group kind");
}

CompressionMatrix compression_matrix(const GroupRingElement& f, Length radius,
                                     std::uint64_t ball_cap) {
  const auto& g = f.group();
  CompressionMatrix out;
  out.radius = radius;
  out.basis = ball(g, radius, ball_cap);

  std::unordered_map<GroupElement, Eigen::Index, GroupElementHash> index;
  index.reserve(out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    index.emplace(out.basis[i], static_cast<Eigen::Index>(i));
  }

  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(out.basis.size() * f.support_size());
  for (std::size_t col = 0; col < out.basis.size(); ++col) {
    for (const auto& [x, c] : f.terms()) {
      auto it = index.find(multiply(g, x, out.basis[col]));
      if (it != index.end()) {
        triplets.emplace_back(it->second, static_cast<Eigen::Index>(col), c);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(out.basis.size());
  out.entries.resize(n, n);
  out.entries.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

LowerEstimate opnorm_lower_estimate(const GroupRingElement& f, Length radius,
                                    const PowerIterationOptions& options) {
  if (options.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  LowerEstimate est;
  est.radius = radius;
  const double l2 = l2_norm(f);
  if (f.is_zero()) return est;

  const CompressionMatrix a = compression_matrix(f, radius, options.ball_cap);
  const Eigen::Index n = a.entries.rows();

  Rng rng(options.seed);
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(0.5 + rng.uniform(), 0.0);
  v.normalize();

  double previous = 0.0;
  est.converged = false;
  for (int it = 1; it <= options.max_iters; ++it) {
    est.iterations = it;
    const Eigen::VectorXcd y = a.entries * v;
    const double sigma = y.norm();
    est.compression_norm = std::max(est.compression_norm, sigma);
    if (sigma == 0.0) {
      est.achieved_tolerance = 0.0;
      est.converged = true;
      break;
    }
    est.achieved_tolerance = std::abs(sigma - previous) / sigma;
    if (est.achieved_tolerance < options.tol) {
      est.converged = true;
      break;
    }
    previous = sigma;
    Eigen::VectorXcd w = a.entries.adjoint() * y;
    const double wn = w.norm();
    if (wn == 0.0) {
      est.converged = true;
      break;
    }
    v = w / wn;
  }
  // Rounding in ||Av|| can overshoot ||f||_1, which bounds every compression.
  est.value = std::min(std::max(l2, est.compression_norm), l1_norm(f));
  return est;
}

double opnorm_lower(const GroupRingElement& f, Length radius,
                    const PowerIterationOptions& options) {
  return opnorm_lower_estimate(f, radius, options).value;
}

double opnorm_upper(const GroupRingElement& f, const RdParams& rd) {
  return std::min(l1_norm(f), rd.C * sobolev_norm(f, rd.s));
}

NormBracket opnorm_bracket(const GroupRingElement& f, const RdParams& rd, Length radius,
                           const PowerIterationOptions& options) {
  const LowerEstimate lower = opnorm_lower_estimate(f, radius, options);
  NormBracket bracket;
  bracket.lower = lower.value;
  bracket.upper = opnorm_upper(f, rd);
  bracket.lower_ball_radius = radius;
  bracket.iterations = lower.iterations;
  bracket.achieved_tolerance = lower.achieved_tolerance;
  bracket.converged = lower.converged;
  return bracket;
}

}  // namespace rdmap
