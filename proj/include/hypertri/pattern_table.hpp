#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hypertri {

inline constexpr int kPatternCount = 20;

enum class PatternClass : std::uint8_t { CCC, TCC, TTC, TTT };
enum class TttSubclass : std::uint8_t { none, dense, sparse };

/// Hyper-triangle pattern number, 1..20.
class PatternId {
 public:
  constexpr PatternId() = default;
  constexpr explicit PatternId(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 1 || value > kPatternCount) throw std::out_of_range("pattern id must be in 1..20");
  }
  constexpr int value() const { return value_; }
  /// Zero-based slot, for arrays of 20.
  constexpr int slot() const { return value_ - 1; }
  constexpr bool operator==(const PatternId&) const = default;

 private:
  std::uint8_t value_ = 1;
};

constexpr PatternClass pattern_class(PatternId p) {
  const int v = p.value();
  return v == 1 ? PatternClass::CCC
       : v <= 5 ? PatternClass::TCC
       : v <= 8 ? PatternClass::TTC
                : PatternClass::TTT;
}

constexpr TttSubclass ttt_subclass(PatternId p) {
  const int v = p.value();
  return v < 9 ? TttSubclass::none : v <= 16 ? TttSubclass::dense : TttSubclass::sparse;
}

/// First and last pattern number of a class.
constexpr std::pair<int, int> class_range(PatternClass c) {
  switch (c) {
    case PatternClass::CCC: return {1, 1};
    case PatternClass::TCC: return {2, 5};
    case PatternClass::TTC: return {6, 8};
    case PatternClass::TTT: return {9, 20};
  }
  return {0, -1};
}

const char* to_string(PatternClass c);
const char* to_string(TttSubclass s);

/// Emptiness of the seven Venn regions of three hyperedges (i, j, k):
/// a = i only, b = j only, c = k only, d = i∩j only, e = j∩k only,
/// f = k∩i only, g = i∩j∩k.
///
/// Packed into 7 bits with `a` as the most significant bit, so integer order
/// equals lexicographic order of the (a..g) tuple.
class RegionSignature {
 public:
  enum Region : int { a = 0, b, c, d, e, f, g };

  constexpr RegionSignature() = default;
  constexpr explicit RegionSignature(std::uint8_t bits) : bits_(bits & 0x7f) {}
  constexpr RegionSignature(bool ra, bool rb, bool rc, bool rd, bool re, bool rf, bool rg)
      : bits_(static_cast<std::uint8_t>(ra << 6 | rb << 5 | rc << 4 | rd << 3 |
                                        re << 2 | rf << 1 | rg)) {}

  constexpr bool operator[](Region r) const { return (bits_ >> (6 - r)) & 1; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool operator==(const RegionSignature&) const = default;

  /// All three pairwise intersections are non-empty.
  constexpr bool valid() const {
    const auto& s = *this;
    return (s[d] || s[g]) && (s[e] || s[g]) && (s[f] || s[g]);
  }
  /// No two of the three hyperedges are equal as sets.
  constexpr bool distinct() const {
    const auto& s = *this;
    return !(!s[a] && !s[b] && !s[e] && !s[f]) &&
           !(!s[a] && !s[c] && !s[d] && !s[e]) &&
           !(!s[b] && !s[c] && !s[d] && !s[f]);
  }

  /// Signature of the same triangle with hyperedges reordered so that new
  /// position t holds old hyperedge order[t].
  RegionSignature permuted(const std::array<int, 3>& order) const;

  /// Lexicographically smallest signature over all six reorderings.
  RegionSignature canonical() const;

  /// "(1,0,0,1,0,0,1)"
  std::string to_string() const;

 private:
  std::uint8_t bits_ = 0;
};

/// The six orderings of three hyperedges.
inline constexpr std::array<std::array<int, 3>, 6> kTriplePermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

class InconsistentInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Region signature from cardinalities: |e_i|, |e_j|, |e_k|, the pairwise
/// overlaps ω_ij, ω_jk, ω_ik and the triple overlap ω_ijk. Throws
/// InconsistentInput when a region size is negative or a pair is disjoint.
RegionSignature signature_of_triangle(std::int64_t size_i, std::int64_t size_j,
                                      std::int64_t size_k, std::int64_t omega_ij,
                                      std::int64_t omega_jk, std::int64_t omega_ik,
                                      std::int64_t omega_ijk);

struct PatternInfo {
  PatternId id;
  PatternClass cls;
  TttSubclass subclass;
  RegionSignature canonical;       // lexicographically smallest orbit member
  RegionSignature representative;  // lexicographically largest orbit member
  int orbit_size;
};

/// Canonical 20-pattern taxonomy over all 128 region signatures.
class PatternTable {
 public:
  const PatternInfo& info(PatternId p) const { return patterns_[p.slot()]; }
  const std::array<PatternInfo, kPatternCount>& patterns() const { return patterns_; }

  /// Pattern of a valid, distinct signature. Throws std::invalid_argument
  /// otherwise.
  PatternId classify(RegionSignature sig) const;

  /// Lookup without validation; 0 for signatures that are not hyper-triangles.
  int lookup(RegionSignature sig) const { return by_signature_[sig.bits()]; }

 private:
  friend PatternTable build_pattern_table();
  std::array<PatternInfo, kPatternCount> patterns_{};
  std::array<std::uint8_t, 128> by_signature_{};
};

/// Enumerates every signature, keeps valid and distinct ones, groups them
/// into orbits under reordering of the three hyperedges and numbers the
/// orbits: CCC < TCC < TTC < TTT; dense TTT before sparse TTT; then by the
/// number of non-empty pair regions {d,e,f}; then by the number of
/// non-empty private regions {a,b,c}.
PatternTable build_pattern_table();

/// Process-wide table, built on first use.
const PatternTable& pattern_table();

inline PatternId pattern_of(RegionSignature sig) { return pattern_table().classify(sig); }

}  // namespace hypertri
