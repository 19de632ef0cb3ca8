#include "rdmap/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace rdmap {

double decay_profile(double r, double s, double x) {
  return std::exp(-r * x + s * std::log1p(x));
}

DecayCertificate::DecayCertificate(double r, double s, bool length_is_integer)
    : r_(r), s_(s), length_is_integer_(length_is_integer) {
  if (!(r > 0.0) || !(s > 0.0)) {
    throw std::invalid_argument("decay certificate requires r > 0 and s > 0");
  }
  peak_ = std::max(0.0, s / r - 1.0);
  K_ = decay_profile(r, s, peak_);
}

double DecayCertificate::tail(double n) const {
  if (n <= peak_) return K_;
  return decay_profile(r_, s_, n);
}

DecayCertificate decay_certificate(double r, double s, bool length_is_integer) {
  return DecayCertificate(r, s, length_is_integer);
}

namespace {

template <typename F>
KernelMatrix build_kernel(const GroupDescriptor& g, std::span<const GroupElement> points,
                          F&& entry_of_length) {
  const auto n = static_cast<Eigen::Index>(points.size());
  KernelMatrix k{g, {points.begin(), points.end()}, Eigen::MatrixXd::Zero(n, n)};
  std::vector<GroupElement> inverses;
  inverses.reserve(points.size());
  for (const auto& p : points) inverses.push_back(inverse(g, p));
  for (Eigen::Index i = 0; i < n; ++i) {
    k.entries(i, i) = entry_of_length(0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Length len = word_length(g, multiply(g, inverses[i], points[j]));
      const double v = entry_of_length(len);
      k.entries(i, j) = v;
      k.entries(j, i) = v;
    }
  }
  return k;
}

}  // namespace

KernelMatrix length_kernel(const GroupDescriptor& g, std::span<const GroupElement> points) {
  return build_kernel(g, points, [](Length len) { return static_cast<double>(len); });
}

KernelMatrix schoenberg_kernel(const GroupDescriptor& g, std::span<const GroupElement> points,
                               double r) {
  if (!(r > 0.0)) throw std::invalid_argument("schoenberg kernel requires r > 0");
  return build_kernel(g, points,
                      [r](Length len) { return std::exp(-r * static_cast<double>(len)); });
}

Eigen::MatrixXd mean_zero_basis(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("mean_zero_basis requires n >= 1");
  if (n == 1) return Eigen::MatrixXd(1, 0);
  const double w = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd u = Eigen::VectorXd::Constant(n, -w);
  u(0) += 1.0;
  const double uu = u.squaredNorm();
  // H = I - 2 u u^T / u^T u maps e_1 to the normalised ones vector; its other
  // columns span the orthogonal complement.
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - (2.0 / uu) * u * u.transpose();
  return h.rightCols(n - 1);
}

CnVerdict cn_check(const Eigen::MatrixXd& kernel, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("cn_check requires tol > 0");
  if (kernel.rows() != kernel.cols()) throw std::invalid_argument("kernel must be square");
  CnVerdict verdict;
  const Eigen::Index n = kernel.rows();
  if (n <= 1) return verdict;

  const Eigen::MatrixXd q = mean_zero_basis(n);
  const Eigen::MatrixXd sym = 0.5 * (kernel + kernel.transpose());
  const Eigen::MatrixXd compressed = q.transpose() * sym * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(compressed);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::Index top = compressed.rows() - 1;
  verdict.max_mean_zero_eigenvalue = solver.eigenvalues()(top);
  verdict.passed = verdict.max_mean_zero_eigenvalue <= tol;
  if (verdict.passed) return verdict;

  Eigen::VectorXd c = q * solver.eigenvectors().col(top);
  const double largest = c.cwiseAbs().maxCoeff();
  double smallest = largest;
  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = std::abs(c(i));
    if (a > 1e-6 * largest) {
      smallest = std::min(smallest, a);
      if (first < 0) first = i;
    }
  }
  c /= (c(first) < 0 ? -smallest : smallest);
  double value = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) value += c(i) * sym(i, j) * c(j);
  }
  verdict.witness = std::move(c);
  verdict.witness_value = value;
  return verdict;
}

CnVerdict cn_check(const GroupDescriptor& g, std::span<const GroupElement> points, double tol) {
  return cn_check(length_kernel(g, points).entries, tol);
}

PsdVerdict psd_check(const Eigen::MatrixXd& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("psd_check requires tol > 0");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  PsdVerdict verdict;
  if (m.rows() == 0) return verdict;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  verdict.min_eigenvalue = solver.eigenvalues()(0);
  verdict.passed = verdict.min_eigenvalue >= -tol;
  return verdict;
}

}  // namespace rdmap
