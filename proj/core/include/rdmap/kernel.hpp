#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rdmap/group.hpp"

namespace rdmap {

inline constexpr double kDefaultSpectralTolerance = 1e-8;

// Symmetric real matrix k(p_i^{-1} p_j) over an ordered point list. Imported
// matrices may carry no group, in which case points is empty.
struct KernelMatrix {
  std::optional<GroupDescriptor> group;
  std::vector<GroupElement> points;
  Eigen::MatrixXd entries;

  Eigen::Index size() const noexcept { return entries.rows(); }
};

struct CnVerdict {
  bool passed = true;
  // Largest eigenvalue of the kernel compressed to {c : sum c = 0}.
  double max_mean_zero_eigenvalue = 0.0;
  // Present iff !passed. Sums to zero and has c^T K c > 0. Scaled so that
  // its smallest significant entry has magnitude 1 and its first significant
  // entry is positive.
  std::optional<Eigen::VectorXd> witness;
  // c^T K c for the reported witness.
  double witness_value = 0.0;
};

struct PsdVerdict {
  bool passed = true;
  double min_eigenvalue = 0.0;
};

// Bounds for phi(x) = exp(-r x) (1 + x)^s over real x >= 0.
//   K         = sup_{x >= 0} phi
//   tail(n)   = sup_{x > n} phi
// The real-variable supremum is used even when the achieved lengths are
// integers, so both values are valid upper bounds for any length function.
class DecayCertificate {
 public:
  DecayCertificate(double r, double s, bool length_is_integer = true);

  double r() const noexcept { return r_; }
  double s() const noexcept { return s_; }
  bool length_is_integer() const noexcept { return length_is_integer_; }
  // Maximiser of phi on [0, inf): max(0, s/r - 1).
  double peak() const noexcept { return peak_; }
  double K() const noexcept { return K_; }
  double tail(double n) const;

 private:
  double r_;
  double s_;
  bool length_is_integer_;
  double peak_;
  double K_;
};

// exp(-r x) (1 + x)^s, evaluated in log space.
double decay_profile(double r, double s, double x);

DecayCertificate decay_certificate(double r, double s, bool length_is_integer = true);

// Entries word_length(p_i^{-1} p_j).
KernelMatrix length_kernel(const GroupDescriptor& g, std::span<const GroupElement> points);

// Entries exp(-r * word_length(p_i^{-1} p_j)).
KernelMatrix schoenberg_kernel(const GroupDescriptor& g, std::span<const GroupElement> points,
                               double r);

// Conditional negativity of a symmetric matrix: passes iff the largest
// eigenvalue on the mean-zero subspace is <= tol. The subspace basis comes
// from the Householder reflection sending e_1 to the normalised ones vector.
CnVerdict cn_check(const Eigen::MatrixXd& kernel, double tol = kDefaultSpectralTolerance);
CnVerdict cn_check(const GroupDescriptor& g, std::span<const GroupElement> points,
                   double tol = kDefaultSpectralTolerance);

PsdVerdict psd_check(const Eigen::MatrixXd& m, double tol = kDefaultSpectralTolerance);
inline PsdVerdict psd_check(const KernelMatrix& m, double tol = kDefaultSpectralTolerance) {
  return psd_check(m.entries, tol);
}

// Orthonormal basis (n x (n-1)) of the mean-zero subspace of R^n.
Eigen::MatrixXd mean_zero_basis(Eigen::Index n);

}  // namespace rdmap
