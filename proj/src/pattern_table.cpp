#include "hypertri/pattern_table.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace hypertri {

const char* to_string(PatternClass c) {
  switch (c) {
    case PatternClass::CCC: return "CCC";
    case PatternClass::TCC: return "TCC";
    case PatternClass::TTC: return "TTC";
    case PatternClass::TTT: return "TTT";
  }
  return "?";
}

const char* to_string(TttSubclass s) {
  switch (s) {
    case TttSubclass::none: return "-";
    case TttSubclass::dense: return "Dense";
    case TttSubclass::sparse: return "Sparse";
  }
  return "?";
}

RegionSignature RegionSignature::permuted(const std::array<int, 3>& order) const {
  using R = RegionSignature;
  const bool priv[3] = {(*this)[R::a], (*this)[R::b], (*this)[R::c]};
  // pair[x][y]: region shared by old hyperedges x and y only.
  bool pair[3][3] = {};
  pair[0][1] = pair[1][0] = (*this)[R::d];
  pair[1][2] = pair[2][1] = (*this)[R::e];
  pair[2][0] = pair[0][2] = (*this)[R::f];
  const auto [p, q, r] = order;
  return {priv[p], priv[q], priv[r], pair[p][q], pair[q][r], pair[r][p], (*this)[R::g]};
}

RegionSignature RegionSignature::canonical() const {
  RegionSignature best = *this;
  for (const auto& order : kTriplePermutations) {
    const auto s = permuted(order);
    if (s.bits() < best.bits()) best = s;
  }
  return best;
}

std::string RegionSignature::to_string() const {
  std::string out = "(";
  for (int r = 0; r < 7; ++r) {
    if (r) out += ',';
    out += (*this)[static_cast<Region>(r)] ? '1' : '0';
  }
  return out + ')';
}

RegionSignature signature_of_triangle(std::int64_t size_i, std::int64_t size_j,
                                      std::int64_t size_k, std::int64_t omega_ij,
                                      std::int64_t omega_jk, std::int64_t omega_ik,
                                      std::int64_t omega_ijk) {
  const std::int64_t g = omega_ijk;
  const std::int64_t d = omega_ij - g;
  const std::int64_t e = omega_jk - g;
  const std::int64_t f = omega_ik - g;
  const std::int64_t a = size_i - omega_ij - omega_ik + g;
  const std::int64_t b = size_j - omega_ij - omega_jk + g;
  const std::int64_t c = size_k - omega_ik - omega_jk + g;
  if (std::min({a, b, c, d, e, f, g}) < 0)
    throw InconsistentInput("region sizes must be non-negative");
  const RegionSignature sig(a > 0, b > 0, c > 0, d > 0, e > 0, f > 0, g > 0);
  if (!sig.valid()) throw InconsistentInput("hyperedges are not pairwise intersecting");
  return sig;
}

namespace {

// A pair is an inclusion wedge when one member has nothing outside the other.
PatternClass class_of(RegionSignature s) {
  using R = RegionSignature;
  auto inclusion = [](bool only_x, bool only_y) { return !only_x || !only_y; };
  const int c = inclusion(s[R::a] || s[R::f], s[R::b] || s[R::e]) +
                inclusion(s[R::b] || s[R::d], s[R::c] || s[R::f]) +
                inclusion(s[R::c] || s[R::e], s[R::a] || s[R::d]);
  return c == 3 ? PatternClass::CCC
       : c == 2 ? PatternClass::TCC
       : c == 1 ? PatternClass::TTC
                : PatternClass::TTT;
}

}  // namespace

PatternTable build_pattern_table() {
  using R = RegionSignature;
  struct Orbit {
    RegionSignature canonical;
    RegionSignature largest;
    int size = 0;
  };
  std::map<std::uint8_t, Orbit> orbits;
  for (int bits = 0; bits < 128; ++bits) {
    const RegionSignature s(static_cast<std::uint8_t>(bits));
    if (!s.valid() || !s.distinct()) continue;
    auto& o = orbits[s.canonical().bits()];
    o.canonical = s.canonical();
    if (o.size == 0 || s.bits() > o.largest.bits()) o.largest = s;
    ++o.size;
  }

  auto order_key = [](RegionSignature s) {
    const auto cls = class_of(s);
    const int sparse = cls == PatternClass::TTT && !s[R::g];
    return std::array<int, 4>{static_cast<int>(cls), sparse,
                              s[R::d] + s[R::e] + s[R::f],
                              s[R::a] + s[R::b] + s[R::c]};
  };
  std::vector<Orbit> ordered;
  for (const auto& [key, o] : orbits) ordered.push_back(o);
  std::stable_sort(ordered.begin(), ordered.end(), [&](const Orbit& x, const Orbit& y) {
    return order_key(x.canonical) < order_key(y.canonical);
  });
  if (ordered.size() != static_cast<std::size_t>(kPatternCount))
    throw std::logic_error("pattern enumeration must yield 20 orbits");

  PatternTable table;
  for (int slot = 0; slot < kPatternCount; ++slot) {
    const auto& o = ordered[slot];
    const PatternId id(slot + 1);
    const auto cls = class_of(o.canonical);
    if (cls != pattern_class(id))
      throw std::logic_error("pattern class ranges violated");
    table.patterns_[slot] = PatternInfo{id, cls, ttt_subclass(id), o.canonical,
                                        o.largest, o.size};
  }
  for (int bits = 0; bits < 128; ++bits) {
    const RegionSignature s(static_cast<std::uint8_t>(bits));
    if (!s.valid() || !s.distinct()) continue;
    const auto canon = s.canonical();
    for (const auto& p : table.patterns_)
      if (p.canonical == canon) table.by_signature_[bits] = static_cast<std::uint8_t>(p.id.value());
  }
  return table;
}

const PatternTable& pattern_table() {
  static const PatternTable table = build_pattern_table();
  return table;
}

PatternId PatternTable::classify(RegionSignature sig) const {
  const int p = by_signature_[sig.bits()];
  if (p == 0) throw std::invalid_argument("signature " + sig.to_string() +
                                          " is not a hyper-triangle");
  return PatternId(p);
}

}  // namespace hypertri
