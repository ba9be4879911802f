#include "jmh/homology.hpp"

#include "doctest.h"

using namespace jmh;

namespace {

Monomial mv(int v, int e = 1) { return Monomial::var(v, e); }

Poly one_plus_a() { return Poly::one() + Poly(mv(VAR_A)); }

}  // namespace

TEST_CASE("jm_to_exponents conventions") {
  CHECK(jm_to_exponents(JMVector(1, {})).e == std::vector<int>{0});
  CHECK(jm_to_exponents(JMVector(2, {1})).e == std::vector<int>{0, 1});
  CHECK(jm_to_exponents(JMVector(3, {1, 2})).e == std::vector<int>{0, 1, 2});
  CHECK(jm_to_exponents(JMVector(2, {1}), Convention::PadRight).e ==
        std::vector<int>{1, 0});
  CHECK(jm_to_exponents(JMVector(3, {1, 2}), Convention::PadRight).e ==
        std::vector<int>{1, 2, 0});
  CHECK_THROWS_AS(JMVector(2, {1, 2}), InvariantViolation);
}

TEST_CASE("pad-left vs pad-right differ as documented") {
  // pad-left (0,1) keeps the Q,T dependence; pad-right (1,0) lands the
  // exponent on the inert z1 and collapses to the e=(0,0) value
  Poly left = superpolynomial(JMVector(2, {1}), Method::Residue).value;
  Poly right =
      superpolynomial(JMVector(2, {1}), Method::Residue, Convention::PadRight).value;
  CHECK(right == one_plus_a() * one_plus_a());
  CHECK(left != right);
}

TEST_CASE("superpolynomial hand oracles, both methods") {
  CHECK(superpolynomial(JMVector(1, {}), Method::Both).value == one_plus_a());
  CHECK(superpolynomial(JMVector(2, {0}), Method::Both).value ==
        one_plus_a() * one_plus_a());
  Poly factor = Poly(mv(VAR_A)) + Poly(mv(VAR_Q)) + Poly(mv(VAR_T)) -
                Poly(mv(VAR_Q) * mv(VAR_T));
  CHECK(superpolynomial(JMVector(2, {1}), Method::Both).value ==
        one_plus_a() * factor);
}

TEST_CASE("superpolynomial is Q<->T symmetric") {
  for (int a1 = 0; a1 <= 3; ++a1) {
    Poly p = superpolynomial(JMVector(2, {a1}), Method::Syt).value;
    CHECK(swap_qt(p) == p);
  }
  Poly p = superpolynomial(JMVector(3, {1, 2}), Method::Both).value;
  CHECK(swap_qt(p) == p);
}

TEST_CASE("qt regrading has no fractional exponents and is well defined") {
  Poly p = superpolynomial(JMVector(3, {1, 2}), Method::Syt).value;
  Poly qt = specialize_qt(p);
  for (auto& [m, c] : qt.terms()) {
    CHECK(m.exponent(VAR_q) % 2 == 0);
    CHECK(m.exponent(VAR_t) % 2 == 0);
  }
}

TEST_CASE("full twist shift: per-tableau det(B) ratio") {
  // n=2: row tableau ratio Q, column tableau ratio T
  FullTwistReport r2 = fulltwist_shift_check(JMVector(2, {0}));
  REQUIRE(r2.entries.size() == 2);
  CHECK(r2.all_pass);
  bool saw_q = false, saw_t = false;
  for (auto& e : r2.entries) {
    if (e.expected_ratio == mv(VAR_Q)) saw_q = true;
    if (e.expected_ratio == mv(VAR_T)) saw_t = true;
  }
  CHECK(saw_q);
  CHECK(saw_t);

  // n=1: empty product, ratio 1
  FullTwistReport r1 = fulltwist_shift_check(JMVector(1, {}));
  REQUIRE(r1.entries.size() == 1);
  CHECK(r1.entries[0].expected_ratio.is_one());
  CHECK(r1.all_pass);

  // n=3 spot check
  CHECK(fulltwist_shift_check(JMVector(3, {1, 2})).all_pass);
}

TEST_CASE("positivity scan") {
  // n=1: always positive
  PositivityReport r1 = positivity_scan(JMVector(1, {}), 0, 2, 0, 2);
  for (auto& pt : r1.points) CHECK(pt.positive);

  // n=2, b=(0): a=(1) contains -QT, flagged non-positive
  PositivityReport r2 = positivity_scan(JMVector(2, {0}), 0, 4, 0, 4);
  bool found_a1 = false;
  for (auto& pt : r2.points) {
    if (pt.a == std::vector<int>{1}) {
      found_a1 = true;
      CHECK(pt.polynomial);
      CHECK_FALSE(pt.positive);
    }
  }
  CHECK(found_a1);
  CHECK(r2.frontier.size() == 5);
}

TEST_CASE("method disagreement never fires on the small grid") {
  for (int a1 = 0; a1 <= 2; ++a1)
    CHECK_NOTHROW(superpolynomial(JMVector(2, {a1}), Method::Both));
  CHECK_NOTHROW(superpolynomial(JMVector(3, {0, 1}), Method::Both));
}
