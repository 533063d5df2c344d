#pragma once

#include <cstdint>
#include <string_view>

#include "hypertri/pattern_counts.hpp"

namespace hypertri {

/// Per-pattern weights ε_p ∈ [0, 1].
class EpsilonWeights {
 public:
  /// All weights zero.
  EpsilonWeights() : w_(PatternArray<double>::Zero()) {}
  /// Throws std::invalid_argument if any weight lies outside [0, 1].
  explicit EpsilonWeights(const PatternArray<double>& weights);

  static EpsilonWeights uniform(double value = 1.0);
  /// ε_p = 1, every other weight 0.
  static EpsilonWeights single(PatternId p);

  double operator[](PatternId p) const { return w_(p.slot()); }
  void set(PatternId p, double value);
  const PatternArray<double>& values() const { return w_; }

 private:
  PatternArray<double> w_;
};

enum class Denominator {
  open_only,     // open triangles
  all_centered,  // open triangles + 3 · closed triangles
};

std::string_view to_string(Denominator d);

struct Coefficient {
  double value = 0.0;
  bool zero_denominator = false;  // value forced to 0
};

/// 3 · Σ_p ε_p · counts[p] divided by the chosen denominator.
Coefficient clustering_coefficient(const PatternCounts& counts, std::uint64_t open,
                                   const EpsilonWeights& eps,
                                   Denominator denominator = Denominator::open_only);

/// Element p-1 is the open-only coefficient with ε_p = 1 and all others 0.
PatternArray<double> per_pattern_profile(const PatternCounts& counts, std::uint64_t open);

}  // namespace hypertri
