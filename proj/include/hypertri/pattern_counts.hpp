#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "hypertri/pattern_table.hpp"

namespace hypertri {

/// One slot per pattern, slot p-1 for pattern p.
template <typename Scalar>
using PatternArray = Eigen::Array<Scalar, kPatternCount, 1>;

/// Sum of the slots belonging to one class.
template <typename Derived>
typename Derived::Scalar class_total(const Eigen::ArrayBase<Derived>& slots,
                                     PatternClass cls) {
  const auto [lo, hi] = class_range(cls);
  return slots.segment(lo - 1, hi - lo + 1).sum();
}

class CounterOverflow : public std::overflow_error {
 public:
  CounterOverflow() : std::overflow_error("pattern counter overflow") {}
};

/// Exact per-pattern triangle tally H[p].
class PatternCounts {
 public:
  using Slots = PatternArray<std::uint64_t>;

  PatternCounts() : slots_(Slots::Zero()) {}

  std::uint64_t operator[](PatternId p) const { return slots_(p.slot()); }
  std::uint64_t at(int pattern) const { return slots_(PatternId(pattern).slot()); }

  void add(PatternId p, std::uint64_t n = 1) {
    auto& s = slots_(p.slot());
    if (s > std::numeric_limits<std::uint64_t>::max() - n) throw CounterOverflow();
    s += n;
  }

  PatternCounts& operator+=(const PatternCounts& other) {
    for (int i = 0; i < kPatternCount; ++i) add(PatternId(i + 1), other.slots_(i));
    return *this;
  }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (int i = 0; i < kPatternCount; ++i) {
      if (sum > std::numeric_limits<std::uint64_t>::max() - slots_(i)) throw CounterOverflow();
      sum += slots_(i);
    }
    return sum;
  }
  std::uint64_t total(PatternClass cls) const { return class_total(slots_, cls); }

  const Slots& slots() const { return slots_; }

  bool operator==(const PatternCounts& other) const { return (slots_ == other.slots_).all(); }

 private:
  Slots slots_;
};

}  // namespace hypertri
