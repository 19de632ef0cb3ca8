#pragma once

#include <complex>
#include <map>

#include "rdmap/group.hpp"

namespace rdmap {

using Complex = std::complex<double>;

// Finitely supported complex function on a group. Zero coefficients are never
// stored and every key is a validated normal form.
class GroupRingElement {
 public:
  using Terms = std::map<GroupElement, Complex>;

  explicit GroupRingElement(GroupDescriptor group) : group_(group) {}

  static GroupRingElement delta(const GroupDescriptor& g, const GroupElement& x,
                                Complex coefficient = 1.0);

  const GroupDescriptor& group() const noexcept { return group_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }

  Complex coefficient(const GroupElement& x) const;
  // Adds value to the coefficient at x, erasing it if the sum is zero.
  void add(const GroupElement& x, Complex value);
  void set(const GroupElement& x, Complex value);

  Length max_support_length() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(Complex scalar);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(Complex scalar, GroupRingElement a) { return a *= scalar; }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  void check_same_group(const GroupRingElement& other) const;

  GroupDescriptor group_;
  Terms terms_;
};

// (f * h)(x) = sum_y f(y) h(y^{-1} x).
GroupRingElement convolve(const GroupRingElement& f, const GroupRingElement& h);

double l1_norm(const GroupRingElement& f);
double l2_norm(const GroupRingElement& f);
// sqrt(sum |f(x)|^2 (1 + length(x))^{2s}).
double sobolev_norm(const GroupRingElement& f, double s);

}  // namespace rdmap
