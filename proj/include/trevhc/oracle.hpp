#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "trevhc/comparisons.hpp"
#include "trevhc/dendrogram.hpp"

namespace trevhc {

// Number of distinct labeled rooted binary tree topologies: (2n-3)!! for
// n >= 2, 1 for n <= 1. Throws when the value would overflow 64 bits.
std::uint64_t count_trees(int n);

// Default guard for exhaustive enumeration; (2n-3)!! growth makes larger n
// a footgun unless explicitly overridden.
inline constexpr int kEnumerationCap = 9;

// Visits every topology on n labeled leaves exactly once (up to
// isomorphism), built by attaching leaf m as a sibling of each of the 2m-3
// existing nodes. Throws if n exceeds the cap.
void enumerate_trees(int n, const std::function<void(const Dendrogram&)>& visit,
                     int cap = kEnumerationCap);

struct BruteForceResult {
  Dendrogram tree;       // first maximizer in enumeration order
  std::int64_t value;
  bool unique;           // exactly one maximizing topology
};

// Exact argmax of trev (resp. consistency count) over all topologies.
BruteForceResult brute_force_max_trev(const TripletSet& triplets, int n, int cap = kEnumerationCap);
BruteForceResult brute_force_max_consistency(const TripletSet& triplets, int n,
                                             int cap = kEnumerationCap);

}  // namespace trevhc
