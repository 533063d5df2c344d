#include <gtest/gtest.h>

#include <bit>

#include "hypertri/pattern_table.hpp"
#include "support.hpp"

using namespace hypertri;

namespace {

RegionSignature sig(std::array<int, 7> s) {
  return RegionSignature(s[0], s[1], s[2], s[3], s[4], s[5], s[6]);
}

oracle::Signature as_oracle(RegionSignature s) {
  oracle::Signature o{};
  for (int r = 0; r < 7; ++r) o[r] = s[static_cast<RegionSignature::Region>(r)];
  return o;
}

// Sets over a 4-element universe as bit masks.
struct Sets {
  unsigned i, j, k;
};

RegionSignature sig_of(Sets s) {
  const unsigned a = s.i & ~s.j & ~s.k, b = s.j & ~s.k & ~s.i, c = s.k & ~s.i & ~s.j;
  const unsigned d = s.i & s.j & ~s.k, e = s.j & s.k & ~s.i, f = s.k & s.i & ~s.j;
  const unsigned g = s.i & s.j & s.k;
  return RegionSignature(a, b, c, d, e, f, g);
}

int card(unsigned x) { return std::popcount(x); }
bool sub(unsigned x, unsigned y) { return (x & ~y) == 0; }

template <typename Fn>
void for_each_triangle(Fn&& fn) {
  constexpr unsigned kFull = 1u << 5;
  for (unsigned i = 1; i < kFull; ++i)
    for (unsigned j = 1; j < kFull; ++j)
      for (unsigned k = 1; k < kFull; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!(i & j) || !(j & k) || !(i & k)) continue;
        fn(Sets{i, j, k});
      }
}

}  // namespace

TEST(PatternTable, TwentyPatternsWithClassSizes) {
  const auto& t = pattern_table();
  int cls[4] = {}, dense = 0, sparse = 0;
  for (const auto& p : t.patterns()) {
    ++cls[static_cast<int>(p.cls)];
    dense += p.subclass == TttSubclass::dense;
    sparse += p.subclass == TttSubclass::sparse;
    EXPECT_EQ(p.cls, pattern_class(p.id));
    EXPECT_EQ(p.subclass, ttt_subclass(p.id));
  }
  EXPECT_EQ(cls[0], 1);
  EXPECT_EQ(cls[1], 4);
  EXPECT_EQ(cls[2], 3);
  EXPECT_EQ(cls[3], 12);
  EXPECT_EQ(dense, 8);
  EXPECT_EQ(sparse, 4);
}

TEST(PatternTable, CaseStudyPins) {
  EXPECT_EQ(pattern_of(sig({1, 1, 1, 1, 0, 0, 1})).value(), 10);
  EXPECT_EQ(pattern_of(sig({1, 1, 1, 1, 1, 0, 1})).value(), 12);
  EXPECT_EQ(pattern_of(sig({1, 1, 1, 0, 1, 1, 1})).value(), 12);
  EXPECT_EQ(pattern_of(sig({1, 0, 0, 1, 0, 1, 1})).value(), 5);
  EXPECT_EQ(pattern_of(sig({1, 0, 0, 1, 0, 0, 1})).value(), 1);
  EXPECT_EQ(pattern_of(sig({1, 1, 1, 0, 1, 0, 1})).value(), 10);
  EXPECT_EQ(pattern_of(sig({1, 1, 1, 1, 1, 1, 1})).value(), 16);
}

TEST(PatternTable, ListedRepresentatives) {
  const std::array<std::array<int, 7>, 20> reps{{{1, 0, 0, 1, 0, 0, 1}, {1, 1, 0, 0, 0, 0, 1},
                                                 {1, 1, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 1, 1},
                                                 {1, 0, 0, 1, 0, 1, 1}, {1, 0, 1, 1, 0, 0, 1},
                                                 {0, 0, 1, 1, 0, 1, 1}, {1, 0, 1, 1, 0, 1, 1},
                                                 {1, 1, 1, 0, 0, 0, 1}, {1, 1, 1, 1, 0, 0, 1},
                                                 {1, 0, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 0, 1},
                                                 {0, 0, 0, 1, 1, 1, 1}, {1, 0, 0, 1, 1, 1, 1},
                                                 {1, 1, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1},
                                                 {0, 0, 0, 1, 1, 1, 0}, {1, 0, 0, 1, 1, 1, 0},
                                                 {1, 1, 0, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1, 0}}};
  for (int p = 1; p <= 20; ++p) EXPECT_EQ(pattern_of(sig(reps[p - 1])).value(), p) << p;
}

TEST(PatternTable, Row12RepresentativeForDisplay) {
  const auto& row = pattern_table().info(PatternId(12));
  EXPECT_EQ(row.representative.to_string(), "(1,1,1,1,1,0,1)");
  EXPECT_EQ(row.cls, PatternClass::TTT);
  EXPECT_EQ(row.subclass, TttSubclass::dense);
}

TEST(PatternTable, MatchesIndependentEnumeration) {
  const auto& ref = oracle::signature_table();
  ASSERT_EQ(ref.rows.size(), 20u);
  int valid = 0;
  for (int bits = 0; bits < 128; ++bits) {
    const RegionSignature s(static_cast<std::uint8_t>(bits));
    const auto it = ref.pattern_of.find(as_oracle(s));
    const int lookup = pattern_table().lookup(s);
    if (it == ref.pattern_of.end()) {
      EXPECT_EQ(lookup, 0) << s.to_string();
      continue;
    }
    ++valid;
    EXPECT_EQ(lookup, it->second) << s.to_string();
  }
  EXPECT_EQ(valid, static_cast<int>(ref.pattern_of.size()));
  for (const auto& row : ref.rows) {
    const auto& info = pattern_table().info(PatternId(row.id));
    EXPECT_EQ(static_cast<int>(info.cls), row.cls);
    EXPECT_EQ(info.orbit_size, static_cast<int>(row.members.size()));
  }
}

TEST(PatternTable, PermutationInvariance) {
  for (int bits = 0; bits < 128; ++bits) {
    const RegionSignature s(static_cast<std::uint8_t>(bits));
    if (!s.valid() || !s.distinct()) {
      EXPECT_THROW(pattern_of(s), std::invalid_argument);
      continue;
    }
    for (const auto& perm : kTriplePermutations)
      EXPECT_EQ(pattern_of(s.permuted(perm)), pattern_of(s));
    EXPECT_EQ(pattern_of(s.canonical()), pattern_of(s));
    EXPECT_LE(s.canonical().bits(), s.bits());
  }
}

TEST(Signature, FromCardinalities) {
  EXPECT_EQ(signature_of_triangle(3, 3, 4, 1, 2, 2, 1).to_string(), "(1,1,1,0,1,1,1)");
  EXPECT_EQ(signature_of_triangle(4, 4, 4, 3, 1, 1, 1).to_string(), "(1,1,1,1,0,0,1)");
  EXPECT_EQ(signature_of_triangle(2, 2, 2, 1, 1, 1, 0).to_string(), "(0,0,0,1,1,1,0)");
}

TEST(Signature, InconsistentInputThrows) {
  EXPECT_THROW(signature_of_triangle(1, 1, 1, 2, 1, 1, 1), InconsistentInput);
  EXPECT_THROW(signature_of_triangle(2, 2, 2, 0, 1, 1, 0), InconsistentInput);
}

TEST(Signature, ValidityAndDistinctness) {
  EXPECT_FALSE(sig({1, 1, 1, 1, 0, 0, 0}).valid());
  EXPECT_TRUE(sig({0, 0, 0, 0, 0, 0, 1}).valid());
  EXPECT_FALSE(sig({0, 0, 0, 0, 0, 0, 1}).distinct());
  EXPECT_TRUE(sig({1, 1, 1, 0, 0, 0, 1}).distinct());
}

TEST(PatternId, Range) {
  EXPECT_THROW(PatternId(0), std::out_of_range);
  EXPECT_THROW(PatternId(21), std::out_of_range);
  EXPECT_EQ(PatternId(20).slot(), 19);
  EXPECT_EQ(class_range(PatternClass::TTC), (std::pair<int, int>{6, 8}));
}

TEST(DecisionRules, ContainedThirdEdge) {
  int checked = 0;
  for_each_triangle([&](Sets s) {
    if (!sub(s.k, s.i) || !sub(s.k, s.j) || sub(s.i, s.j) || sub(s.j, s.i)) return;
    const int expected = card(s.i & s.j) > card(s.k) ? 3 : 2;
    EXPECT_EQ(pattern_of(sig_of(s)).value(), expected);
    ++checked;
  });
  EXPECT_GT(checked, 0);
}

TEST(DecisionRules, ContainingThirdEdge) {
  int checked = 0;
  for_each_triangle([&](Sets s) {
    if (!sub(s.i, s.k) || !sub(s.j, s.k) || sub(s.i, s.j) || sub(s.j, s.i)) return;
    const int w_ki = card(s.k & s.i), w_kj = card(s.k & s.j), w_ij = card(s.i & s.j);
    const int expected = w_ki + w_kj - w_ij == card(s.k) ? 4 : 5;
    EXPECT_EQ(pattern_of(sig_of(s)).value(), expected);
    ++checked;
  });
  EXPECT_GT(checked, 0);
}

TEST(DecisionRules, OneInclusion) {
  int checked = 0;
  for_each_triangle([&](Sets s) {
    if (!sub(s.j, s.i)) return;
    // e_k must form intersection wedges with both.
    if (sub(s.k, s.i) || sub(s.i, s.k) || sub(s.k, s.j) || sub(s.j, s.k)) return;
    const int w_ik = card(s.i & s.k), w_jk = card(s.j & s.k), w_ij = card(s.i & s.j);
    const int expected = w_ik == w_jk ? 6 : (w_ij + w_ik - w_jk == card(s.i) ? 7 : 8);
    EXPECT_EQ(pattern_of(sig_of(s)).value(), expected);
    ++checked;
  });
  EXPECT_GT(checked, 0);
}

TEST(ClassConsistency, ConcreteTriangles) {
  for_each_triangle([&](Sets s) {
    const int inclusions = (sub(s.i, s.j) || sub(s.j, s.i)) + (sub(s.j, s.k) || sub(s.k, s.j)) +
                           (sub(s.i, s.k) || sub(s.k, s.i));
    const auto p = pattern_of(sig_of(s));
    EXPECT_EQ(static_cast<int>(pattern_class(p)), 3 - inclusions);
    EXPECT_EQ(ttt_subclass(p) == TttSubclass::sparse, inclusions == 0 && !(s.i & s.j & s.k));
  });
}
