#include "jmh/homology.hpp"

#include <algorithm>

namespace jmh {

JMVector::JMVector(int strands, std::vector<int> twists)
    : a(std::move(twists)), n(strands) {
  if (n < 1 || (int)a.size() != n - 1)
    throw InvariantViolation("JM vector must have length n-1");
}

JMVector JMVector::shifted_by_ones() const {
  std::vector<int> b = a;
  for (int& x : b) ++x;
  return JMVector(n, std::move(b));
}

ExponentVector jm_to_exponents(const JMVector& a, Convention conv) {
  ExponentVector e;
  e.e.resize(a.n, 0);
  if (conv == Convention::PadLeft) {
    for (int j = 0; j < a.n - 1; ++j) e.e[j + 1] = a.a[j];
  } else {
    for (int j = 0; j < a.n - 1; ++j) e.e[j] = a.a[j];
  }
  return e;
}

Superpolynomial superpolynomial(const JMVector& a, Method method, Convention conv,
                                int threads) {
  ExponentVector e = jm_to_exponents(a, conv);
  Superpolynomial out;
  out.jm = a;
  out.convention = conv;
  out.method = method;
  switch (method) {
    case Method::Syt:
      out.value = evaluate_syt_sum(e, threads);
      break;
    case Method::Residue:
      out.value = evaluate_full(e);
      break;
    case Method::Both: {
      Poly s = evaluate_syt_sum(e, threads);
      Poly r = evaluate_full(e);
      if (s != r)
        throw MethodDisagreement("SYT sum and iterated residue differ: " + s.str() +
                                 " vs " + r.str());
      out.value = std::move(s);
      break;
    }
  }
  return out;
}

FullTwistReport fulltwist_shift_check(const JMVector& a, Convention conv) {
  FullTwistReport report;
  ExponentVector e0 = jm_to_exponents(a, conv);
  ExponentVector e1 = jm_to_exponents(a.shifted_by_ones(), conv);
  for (const auto& t : syt_all(a.n)) {
    FullTwistEntry entry;
    entry.tableau = t.str();
    Monomial det;  // prod_{i>=2} weight_i(t); weight_1 = 1 always
    for (int i = 2; i <= t.n(); ++i) det = det * t.weight(i);
    entry.expected_ratio = det;
    FactoredRat lhs = evaluate_tableau(e1, t);
    FactoredRat rhs = evaluate_tableau(e0, t).mul_term(det, Int(1));
    entry.pass = lhs.equals(rhs);
    if (!entry.pass) report.all_pass = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

PositivityReport positivity_scan(const JMVector& b, int k_lo, int k_hi, int m_lo,
                                 int m_hi, int threads) {
  PositivityReport report;
  for (int k = k_lo; k <= k_hi; ++k) {
    int first_stable = -1;
    bool seen_positive = false, broke_after_positive = false;
    for (int m = m_lo; m <= m_hi; ++m) {
      ScanPoint pt;
      pt.k = k;
      pt.m = m;
      pt.a.resize(std::max(b.n - 1, 0));
      for (int j = 0; j < b.n - 1; ++j) pt.a[j] = b.a[j] + k + m * (j + 1);
      try {
        Superpolynomial s =
            superpolynomial(JMVector(b.n, pt.a), Method::Syt, Convention::PadLeft,
                            threads);
        pt.polynomial = true;
        pt.positive = true;
        for (auto& [mono, c] : s.value.terms())
          if (c < 0) pt.positive = false;
      } catch (const NonPolynomialResult&) {
        pt.polynomial = false;
        pt.positive = false;
      }
      if (pt.positive) {
        if (!seen_positive) first_stable = m;
        seen_positive = true;
      } else if (seen_positive) {
        broke_after_positive = true;
        first_stable = -1;
        seen_positive = false;
      }
      report.points.push_back(std::move(pt));
    }
    if (broke_after_positive) report.monotone = false;
    report.frontier.push_back({k, first_stable});
  }
  return report;
}

}  // namespace jmh
