#ifndef JMH_CHARTS_HPP
#define JMH_CHARTS_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

// Combinatorial atlas of the free flag Hilbert scheme: nested-set pairs
// NS_n, their pivots, and the free-coordinate count n(n-1)/2.  This module
// is audit-only; it feeds no data into the residue engine.

namespace jmh {

using IndexPair = std::pair<int, int>;  // (i, j), 1-based, i < j

struct NestedSetPair {
  int n = 0;
  // sx[k-1] = S_x^k for k = 1..n; S_x^k subset of {k+1..n}, nested
  // descending, with |S_x^i| + |S_y^i| = n - i.
  std::vector<std::set<int>> sx, sy;
};

struct ChartLayout {
  std::set<IndexPair> pivots_x, pivots_y;
  std::set<IndexPair> free_x, free_y;  // N_x(S), N_y(S)
};

// Every element of NS_n exactly once, deterministic order.
std::vector<NestedSetPair> nested_sets(int n);

// P_x(S) = {(i,j) | j in S_x^i \ S_x^{i+1}}, same for y.
std::pair<std::set<IndexPair>, std::set<IndexPair>> pivots(const NestedSetPair& s);

// Strictly upper-triangular entries partitioned into pivots (pinned to 1),
// zero-pinned (x_{i-1,j} = 0 when j in S_x^i), and free.  Asserts
// |free_x| + |free_y| = n(n-1)/2.
ChartLayout free_coordinates(const NestedSetPair& s);

// JSON atlas report for the CLI.
std::string charts_report_json(int n);

}  // namespace jmh

#endif
