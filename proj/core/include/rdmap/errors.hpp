#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdmap {

// An element or group-ring element was used with a descriptor it does not
// belong to.
class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ball enumeration would exceed the configured element cap.
class BallCapExceeded : public std::runtime_error {
 public:
  BallCapExceeded(std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error("ball of " + std::to_string(requested) +
                           " elements exceeds cap of " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

// Malformed JSON / text encodings.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rdmap
