#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hypertri/exact_count.hpp"
#include "hypertri/hypergraph.hpp"
#include "oracle/oracle.hpp"

namespace fixtures {

inline hypertri::Hypergraph parse(const std::string& text) {
  std::istringstream in(text);
  return hypertri::load_edge_list(in).graph;
}

// Coauthorship case study.
inline hypertri::Hypergraph fig6() { return parse("1 2 3\n3 4 5\n2 3 4 6\n2 3 4 7\n4 8 9 10\n"); }

// Email case study.
inline hypertri::Hypergraph fig7() {
  return parse("1 29 41 51 62 65 97 107 133\n1 51\n1 133\n29 97\n41 97\n29 65\n");
}

inline hypertri::Hypergraph ring() { return parse("1 2\n2 3\n1 3\n"); }
inline hypertri::Hypergraph chain() { return parse("1 2 3\n1 2\n1\n"); }

struct RandomCase {
  std::uint64_t seed;
  double bias;
  hypertri::Hypergraph graph;
};

// Seeded graphs with at most 40 vertices, 60 hyperedges, sizes 1..6.
inline std::vector<RandomCase> random_corpus(int count = 120) {
  std::vector<RandomCase> out;
  for (int s = 0; s < count; ++s) {
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(s);
    const double bias = s % 2 ? 0.3 : 0.0;
    const std::size_t vertices = 8 + static_cast<std::size_t>(s * 7 % 33);
    const std::size_t edges = 3 + static_cast<std::size_t>(s * 13 % 58);
    out.push_back({seed, bias, hypertri::random_hypergraph(vertices, edges, 1, 6, bias, seed).graph});
  }
  return out;
}

inline std::array<std::uint64_t, 21> as_array(const hypertri::PatternCounts& c) {
  std::array<std::uint64_t, 21> a{};
  for (int p = 1; p <= 20; ++p) a[p] = c.at(p);
  return a;
}

}  // namespace fixtures
