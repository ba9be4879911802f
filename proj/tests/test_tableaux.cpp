#include "jmh/tableaux.hpp"

#include <map>
#include <set>

#include "doctest.h"

using namespace jmh;

TEST_CASE("partition counts") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  // deterministic, duplicate-free
  auto ps = partitions(5);
  std::set<std::string> seen;
  for (auto& p : ps) CHECK(seen.insert(p.str()).second);
}

TEST_CASE("syt counts match the hook length formula") {
  CHECK(syt_enumerate(Partition({2, 1})).size() == 2);
  CHECK(syt_enumerate(Partition({5})).size() == 1);
  CHECK(syt_enumerate(Partition({2, 2})).size() == 2);
  int expected_totals[] = {1, 2, 4, 10, 26, 76};
  for (int n = 1; n <= 6; ++n) {
    uint64_t total = 0;
    for (auto& shape : partitions(n)) {
      auto ts = syt_enumerate(shape);
      CHECK(ts.size() == shape.hook_count());
      total += ts.size();
    }
    CHECK(total == (uint64_t)expected_totals[n - 1]);
    CHECK(syt_all(n).size() == (size_t)expected_totals[n - 1]);
  }
}

TEST_CASE("tableaux are standard and start at the corner") {
  for (auto& t : syt_all(5)) {
    // box 1 at (0,0) hence trivial weight
    CHECK(t.filling()[0].row == 0);
    CHECK(t.filling()[0].col == 0);
    CHECK(t.weight(1).is_one());
    // rows increase left to right, columns top to bottom
    std::map<std::pair<int, int>, int> label;
    for (int i = 1; i <= t.n(); ++i)
      label[{t.filling()[i - 1].row, t.filling()[i - 1].col}] = i;
    for (auto& [rc, l] : label) {
      auto left = label.find({rc.first, rc.second - 1});
      if (left != label.end()) CHECK(left->second < l);
      auto up = label.find({rc.first - 1, rc.second});
      if (up != label.end()) CHECK(up->second < l);
    }
  }
}

TEST_CASE("box_weights examples") {
  auto single = syt_enumerate(Partition({1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].box_weights()[0].is_one());

  auto row = syt_enumerate(Partition({2}));
  REQUIRE(row.size() == 1);
  CHECK(row[0].box_weights()[1] == Monomial::var(VAR_Q));

  auto col = syt_enumerate(Partition({1, 1}));
  REQUIRE(col.size() == 1);
  CHECK(col[0].box_weights()[1] == Monomial::var(VAR_T));
}

TEST_CASE("weight multiset depends only on shape; transpose swaps Q and T") {
  for (auto& shape : partitions(4)) {
    auto ts = syt_enumerate(shape);
    std::multiset<Monomial> ref;
    for (auto& w : ts[0].box_weights()) ref.insert(w);
    for (auto& t : ts) {
      std::multiset<Monomial> ws;
      for (auto& w : t.box_weights()) ws.insert(w);
      CHECK(ws == ref);
    }
    // transpose swaps Q and T in every weight
    auto tr = syt_enumerate(shape.transposed());
    std::multiset<Monomial> swapped;
    for (auto& w : tr[0].box_weights()) {
      Monomial s = Monomial::var(VAR_Q, w.exponent(VAR_T)) *
                   Monomial::var(VAR_T, w.exponent(VAR_Q));
      swapped.insert(s);
    }
    CHECK(swapped == ref);
  }
}

TEST_CASE("zeta kernels") {
  Monomial x = Monomial::var(z_var(1)) / Monomial::var(z_var(2));
  Monomial qt = Monomial::var(VAR_Q) * Monomial::var(VAR_T);
  FactoredRat z = zeta(x);
  CHECK(z.num_factors() == FactorMultiset{{x, 1}, {qt * x, 1}});
  CHECK(z.den_factors() ==
        FactorMultiset{{Monomial::var(VAR_Q) * x, 1}, {Monomial::var(VAR_T) * x, 1}});

  FactoredRat zt = zeta_tilde(x);
  CHECK(zt.num_factors() == FactorMultiset{{x, 1}});

  // zeta(x) = zeta_tilde(x) * (1 - QT x)
  CHECK(zt.mul(FactoredRat::from_factor(qt * x)).equals(z));

  // zeta vanishes at x = 1 (substituting z1 <- z2)
  CHECK(z.substituted(z_var(1), Monomial::var(z_var(2))).is_zero());

  // vanishing numerator at x = (QT)^{-1}: substitute z1 <- z2/(QT)
  CHECK(z.substituted(z_var(1), Monomial::var(z_var(2)) * qt.inverse()).is_zero());
}

TEST_CASE("tableau serialization") {
  auto ts = syt_enumerate(Partition({2, 1}));
  REQUIRE(ts.size() == 2);
  std::set<std::string> reps;
  for (auto& t : ts) reps.insert(t.str());
  CHECK(reps == std::set<std::string>{"[[1,2],[3]]", "[[1,3],[2]]"});
}
