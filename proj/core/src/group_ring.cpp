#include "rdmap/group_ring.hpp"

#include <cmath>
#include <stdexcept>

#include "rdmap/errors.hpp"

namespace rdmap {

GroupRingElement GroupRingElement::delta(const GroupDescriptor& g, const GroupElement& x,
                                         Complex coefficient) {
  GroupRingElement f(g);
  f.add(x, coefficient);
  return f;
}

Complex GroupRingElement::coefficient(const GroupElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Complex{} : it->second;
}

void GroupRingElement::add(const GroupElement& x, Complex value) {
  validate(group_, x);
  if (value == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(x, value);
  if (!inserted) {
    it->second += value;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

void GroupRingElement::set(const GroupElement& x, Complex value) {
  validate(group_, x);
  if (value == Complex{}) {
    terms_.erase(x);
  } else {
    terms_[x] = value;
  }
}

Length GroupRingElement::max_support_length() const {
  Length longest = 0;
  for (const auto& [x, c] : terms_) longest = std::max(longest, word_length(group_, x));
  return longest;
}

void GroupRingElement::check_same_group(const GroupRingElement& other) const {
  if (!(group_ == other.group_)) {
    throw GroupMismatch("group ring elements over " + group_.to_string() + " and " +
                        other.group_.to_string());
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  check_same_group(other);
  for (const auto& [x, c] : other.terms_) add(x, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  check_same_group(other);
  for (const auto& [x, c] : other.terms_) add(x, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(Complex scalar) {
  if (scalar == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    it = it->second == Complex{} ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

GroupRingElement convolve(const GroupRingElement& f, const GroupRingElement& h) {
  if (!(f.group() == h.group())) {
    throw GroupMismatch("convolution of elements over different groups");
  }
  const auto& g = f.group();
  GroupRingElement out(g);
  for (const auto& [x, a] : f.terms()) {
    for (const auto& [y, b] : h.terms()) out.add(multiply(g, x, y), a * b);
  }
  return out;
}

double l1_norm(const GroupRingElement& f) {
  double total = 0.0;
  for (const auto& [x, c] : f.terms()) total += std::abs(c);
  return total;
}

double l2_norm(const GroupRingElement& f) {
  double total = 0.0;
  for (const auto& [x, c] : f.terms()) total += std::norm(c);
  return std::sqrt(total);
}

double sobolev_norm(const GroupRingElement& f, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("sobolev norm requires s > 0");
  double total = 0.0;
  for (const auto& [x, c] : f.terms()) {
    const double weight = std::pow(1.0 + static_cast<double>(word_length(f.group(), x)), 2.0 * s);
    total += std::norm(c) * weight;
  }
  return std::sqrt(total);
}

}  // namespace rdmap
