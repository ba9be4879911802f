#include "jmh/charts.hpp"

#include <nlohmann/json.hpp>
#include <set>
#include <vector>

#include "doctest.h"

using namespace jmh;

namespace {

// Independent exhaustive oracle: filter all pairs of subset chains by the
// defining constraints, without the incremental construction.
int brute_force_count(int n) {
  // enumerate chains level by level as raw bitmask tuples
  std::vector<std::vector<unsigned>> chains;  // all (S^1..S^n) for one family
  std::vector<unsigned> cur(n + 1, 0);
  std::vector<std::vector<unsigned>> all;
  auto rec = [&](auto&& self, int level) -> void {
    if (level > n) {
      all.push_back(std::vector<unsigned>(cur.begin() + 1, cur.end()));
      return;
    }
    for (unsigned m = 0; m < (1u << n); ++m) {
      bool ok = true;
      for (int j = 1; j <= n && ok; ++j)
        if ((m >> (j - 1)) & 1 && j <= level) ok = false;  // S^k subset {k+1..n}
      if (!ok) continue;
      if (level > 1 && (m & ~cur[level - 1]) != 0) continue;  // nested: S^k subset S^{k-1}
      cur[level] = m;
      self(self, level + 1);
    }
    cur[level] = 0;
  };
  rec(rec, 1);
  int count = 0;
  for (auto& sx : all)
    for (auto& sy : all) {
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i)
        if (__builtin_popcount(sx[i - 1]) + __builtin_popcount(sy[i - 1]) != n - i)
          ok = false;
      if (ok) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("nested set counts vs brute force") {
  CHECK(nested_sets(1).size() == 1);
  CHECK(nested_sets(2).size() == 2);
  CHECK(nested_sets(3).size() == 6);
  for (int n = 1; n <= 4; ++n)
    CHECK((int)nested_sets(n).size() == brute_force_count(n));
}

TEST_CASE("nested sets are duplicate-free and valid") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    for (auto& s : nested_sets(n)) {
      std::string key;
      for (int k = 0; k < n; ++k) {
        key += "x";
        for (int j : s.sx[k]) key += std::to_string(j);
        key += "y";
        for (int j : s.sy[k]) key += std::to_string(j);
      }
      CHECK(seen.insert(key).second);
      for (int i = 1; i <= n; ++i) {
        CHECK((int)(s.sx[i - 1].size() + s.sy[i - 1].size()) == n - i);
        for (int j : s.sx[i - 1]) CHECK(j > i);
        for (int j : s.sy[i - 1]) CHECK(j > i);
      }
    }
  }
}

TEST_CASE("pivots") {
  // n=2, S_x^1 = {2}: P_x = {(1,2)}, P_y empty
  for (auto& s : nested_sets(2)) {
    auto [px, py] = pivots(s);
    CHECK(px.size() + py.size() == 1);
    if (s.sx[0].count(2)) {
      CHECK(px == std::set<IndexPair>{{1, 2}});
      CHECK(py.empty());
    }
  }
  // n=1: empty
  auto [px1, py1] = pivots(nested_sets(1)[0]);
  CHECK(px1.empty());
  CHECK(py1.empty());
  // n=3, S_x = ({2,3},{3},{}), S_y trivial: P_x = {(1,2),(2,3)}
  for (auto& s : nested_sets(3)) {
    if (s.sx[0] == std::set<int>{2, 3} && s.sx[1] == std::set<int>{3}) {
      auto [px, py] = pivots(s);
      CHECK(px == std::set<IndexPair>{{1, 2}, {2, 3}});
      CHECK(py.empty());
    }
  }
  // |P_x| + |P_y| = n - 1 always
  for (int n = 1; n <= 5; ++n)
    for (auto& s : nested_sets(n)) {
      auto [px, py] = pivots(s);
      CHECK((int)(px.size() + py.size()) == n - 1);
    }
}

TEST_CASE("free coordinate count is n(n-1)/2") {
  for (int n = 1; n <= 6; ++n)
    for (auto& s : nested_sets(n)) {
      ChartLayout layout = free_coordinates(s);
      CHECK((int)(layout.free_x.size() + layout.free_y.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("n=2 chart layouts") {
  for (auto& s : nested_sets(2)) {
    ChartLayout layout = free_coordinates(s);
    if (s.sx[0].count(2)) {
      // S_x^1 = {2}: x_{12} is the pivot, y_{12} free
      CHECK(layout.free_x.empty());
      CHECK(layout.free_y == std::set<IndexPair>{{1, 2}});
    } else {
      CHECK(layout.free_y.empty());
      CHECK(layout.free_x == std::set<IndexPair>{{1, 2}});
    }
  }
}

TEST_CASE("charts JSON report") {
  auto doc = nlohmann::json::parse(charts_report_json(3));
  CHECK(doc["n"] == 3);
  CHECK(doc["count"] == 6);
  CHECK(doc["charts"].size() == 6);
  for (auto& c : doc["charts"]) CHECK(c["free_count"] == 3);
}
