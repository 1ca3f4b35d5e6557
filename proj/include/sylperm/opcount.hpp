#pragma once

#include <cstdint>

namespace sylperm {

// Counting convention, fixed across all engines: one addition per binary sum
// inside a Sigma, one multiplication per binary product inside a Pi. Sign
// applications, negations and coefficient bookkeeping are free. Merging is
// componentwise, so partitioned sweeps reduce exactly.
struct OpCount {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;

  std::uint64_t total() const { return additions + multiplications; }

  OpCount& operator+=(const OpCount& o) {
    additions += o.additions;
    multiplications += o.multiplications;
    return *this;
  }
  friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

}  // namespace sylperm
