#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rdmap {

// Word metrics on the built-in groups take nonnegative integer values.
using Length = std::int64_t;

inline constexpr std::uint64_t kDefaultBallCap = 200'000;

enum class GroupKind { kFree, kFreeAbelian, kCyclic };

// Determines multiplication, inverse, identity and length of a built-in group:
// free(k) with 1 <= k <= 26, free-abelian(d) with d >= 1, cyclic(m) with m >= 2.
class GroupDescriptor {
 public:
  static GroupDescriptor free(int rank);
  static GroupDescriptor free_abelian(int rank);
  static GroupDescriptor cyclic(std::int64_t order);

  // Accepts "free(2)", "free-abelian(1)", "cyclic(5)" and the colon forms
  // "free:2" etc.
  static GroupDescriptor parse(std::string_view text);

  GroupKind kind() const noexcept { return kind_; }
  // Rank for free / free-abelian, order for cyclic.
  std::int64_t parameter() const noexcept { return parameter_; }

  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  GroupDescriptor(GroupKind kind, std::int64_t parameter)
      : kind_(kind), parameter_(parameter) {}

  GroupKind kind_;
  std::int64_t parameter_;
};

// Normal form of a group element.
//   free:          letter codes, generator i is 2i and its inverse 2i+1, so the
//                  natural code order is a < A < b < B < ...; no adjacent
//                  cancelling pair.
//   free-abelian:  integer d-vector.
//   cyclic:        single residue in [0, m).
// Comparison is lexicographic on the payload, which gives the canonical
// within-length order used by ball().
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> payload)
      : payload_(std::move(payload)) {}

  const std::vector<std::int64_t>& payload() const noexcept { return payload_; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::int64_t> payload_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

GroupElement identity(const GroupDescriptor& g);
GroupElement multiply(const GroupDescriptor& g, const GroupElement& x,
                      const GroupElement& y);
GroupElement inverse(const GroupDescriptor& g, const GroupElement& x);
Length word_length(const GroupDescriptor& g, const GroupElement& x);

// Throws GroupMismatch unless x is a valid normal form for g.
void validate(const GroupDescriptor& g, const GroupElement& x);

// Builders that normalize their input.
GroupElement make_free_word(const GroupDescriptor& g, std::string_view letters);
GroupElement make_vector(const GroupDescriptor& g, std::vector<std::int64_t> v);
GroupElement make_residue(const GroupDescriptor& g, std::int64_t r);

// Number of elements of length <= n, saturating at UINT64_MAX.
std::uint64_t ball_size(const GroupDescriptor& g, Length n);

// All elements of length <= n, breadth-first by length and in payload order
// within a length. Throws BallCapExceeded when ball_size(g, n) > cap.
std::vector<GroupElement> ball(const GroupDescriptor& g, Length n,
                               std::uint64_t cap = kDefaultBallCap);

// Text form of free-group words ("aBa"); for the other kinds see io.hpp.
std::string free_word_string(const GroupDescriptor& g, const GroupElement& x);

}  // namespace rdmap
