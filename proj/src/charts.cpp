#include "jmh/charts.hpp"

#include <nlohmann/json.hpp>

#include "jmh/symbolic.hpp"

namespace jmh {

namespace {

// Subsets of {lo..n} as bitmasks (bit j set <=> j+1 in the set), ordered.
std::vector<unsigned> subsets_of_size(int lo, int n, int size) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    bool ok = true;
    for (int j = 1; j <= n; ++j)
      if ((mask >> (j - 1)) & 1)
        if (j < lo) ok = false;
    if (ok) out.push_back(mask);
  }
  return out;
}

std::set<int> to_set(unsigned mask, int n) {
  std::set<int> s;
  for (int j = 1; j <= n; ++j)
    if ((mask >> (j - 1)) & 1) s.insert(j);
  return s;
}

bool subset_of(unsigned a, unsigned b) { return (a & ~b) == 0; }

}  // namespace

std::vector<NestedSetPair> nested_sets(int n) {
  if (n < 1) throw InvariantViolation("nested_sets: n must be positive");
  std::vector<NestedSetPair> out;
  // Build chains from level n (both empty) down to level 1; at level i the
  // sets live in {i+1..n} and |S_x^i| + |S_y^i| = n - i.
  std::vector<unsigned> cx(n + 1, 0), cy(n + 1, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 0) {
      NestedSetPair s;
      s.n = n;
      for (int k = 1; k <= n; ++k) {
        s.sx.push_back(to_set(cx[k], n));
        s.sy.push_back(to_set(cy[k], n));
      }
      out.push_back(std::move(s));
      return;
    }
    int total = n - i;
    for (int szx = 0; szx <= total; ++szx) {
      for (unsigned mx : subsets_of_size(i + 1, n, szx)) {
        if (!subset_of(cx[i + 1], mx)) continue;
        for (unsigned my : subsets_of_size(i + 1, n, total - szx)) {
          if (!subset_of(cy[i + 1], my)) continue;
          cx[i] = mx;
          cy[i] = my;
          self(self, i - 1);
        }
      }
    }
    cx[i] = cy[i] = 0;
  };
  // level n is forced empty
  rec(rec, n - 1);
  return out;
}

std::pair<std::set<IndexPair>, std::set<IndexPair>> pivots(const NestedSetPair& s) {
  std::set<IndexPair> px, py;
  for (int i = 1; i < s.n; ++i) {
    for (int j : s.sx[i - 1])
      if (!s.sx[i].count(j)) px.insert({i, j});
    for (int j : s.sy[i - 1])
      if (!s.sy[i].count(j)) py.insert({i, j});
  }
  return {px, py};
}

ChartLayout free_coordinates(const NestedSetPair& s) {
  ChartLayout out;
  auto [px, py] = pivots(s);
  out.pivots_x = px;
  out.pivots_y = py;
  std::set<IndexPair> zero_x, zero_y;
  // x_{i-1,j} = 0 if j in S_x^i (only entries with row index >= 1).
  for (int i = 2; i <= s.n; ++i) {
    for (int j : s.sx[i - 1]) zero_x.insert({i - 1, j});
    for (int j : s.sy[i - 1]) zero_y.insert({i - 1, j});
  }
  for (int i = 1; i <= s.n; ++i) {
    for (int j = i + 1; j <= s.n; ++j) {
      IndexPair p{i, j};
      if (!out.pivots_x.count(p) && !zero_x.count(p)) out.free_x.insert(p);
      if (!out.pivots_y.count(p) && !zero_y.count(p)) out.free_y.insert(p);
    }
  }
  int expected = s.n * (s.n - 1) / 2;
  if ((int)(out.free_x.size() + out.free_y.size()) != expected)
    throw InvariantViolation("free coordinate count != n(n-1)/2");
  return out;
}

std::string charts_report_json(int n) {
  nlohmann::json doc;
  doc["n"] = n;
  auto charts = nested_sets(n);
  doc["count"] = charts.size();
  doc["charts"] = nlohmann::json::array();
  for (const auto& s : charts) {
    nlohmann::json c;
    auto dump_chain = [](const std::vector<std::set<int>>& chain) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& level : chain) arr.push_back(level);
      return arr;
    };
    c["sx"] = dump_chain(s.sx);
    c["sy"] = dump_chain(s.sy);
    ChartLayout layout = free_coordinates(s);
    auto dump_pairs = [](const std::set<IndexPair>& ps) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto& [i, j] : ps) arr.push_back({i, j});
      return arr;
    };
    c["pivots_x"] = dump_pairs(layout.pivots_x);
    c["pivots_y"] = dump_pairs(layout.pivots_y);
    c["free_x"] = dump_pairs(layout.free_x);
    c["free_y"] = dump_pairs(layout.free_y);
    c["free_count"] = layout.free_x.size() + layout.free_y.size();
    doc["charts"].push_back(std::move(c));
  }
  return doc.dump();
}

}  // namespace jmh
