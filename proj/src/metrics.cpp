#include "hypertri/metrics.hpp"

#include <stdexcept>
#include <string>

namespace hypertri {

namespace {

void check_weight(double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("epsilon weights must lie in [0, 1], got " + std::to_string(v));
}

}  // namespace

EpsilonWeights::EpsilonWeights(const PatternArray<double>& weights) : w_(weights) {
  for (int i = 0; i < kPatternCount; ++i) check_weight(w_(i));
}

EpsilonWeights EpsilonWeights::uniform(double value) {
  return EpsilonWeights(PatternArray<double>::Constant(value));
}

EpsilonWeights EpsilonWeights::single(PatternId p) {
  EpsilonWeights e;
  e.set(p, 1.0);
  return e;
}

void EpsilonWeights::set(PatternId p, double value) {
  check_weight(value);
  w_(p.slot()) = value;
}

std::string_view to_string(Denominator d) {
  return d == Denominator::open_only ? "open" : "centered";
}

Coefficient clustering_coefficient(const PatternCounts& counts, std::uint64_t open,
                                   const EpsilonWeights& eps, Denominator denominator) {
  double denom = static_cast<double>(open);
  if (denominator == Denominator::all_centered)
    denom += 3.0 * static_cast<double>(counts.total());
  if (denom == 0.0) return {0.0, true};
  const double weighted = (eps.values() * counts.slots().cast<double>()).sum();
  return {3.0 * weighted / denom, false};
}

PatternArray<double> per_pattern_profile(const PatternCounts& counts, std::uint64_t open) {
  if (open == 0) return PatternArray<double>::Zero();
  return 3.0 * counts.slots().cast<double>() / static_cast<double>(open);
}

}  // namespace hypertri
