#ifndef JMH_HOMOLOGY_HPP
#define JMH_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "jmh/engine.hpp"
#include "jmh/symbolic.hpp"

// Jucys-Murphy braid bookkeeping: the JM vector -> z-exponent convention,
// superpolynomial evaluation through both engine routes, the full-twist
// det(B) shift check, and the positivity scan.

namespace jmh {

struct MethodDisagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Twist exponents of the JM braid delta^a on n strands.
struct JMVector {
  std::vector<int> a;  // length n - 1
  int n = 0;           // strand count

  JMVector() = default;
  JMVector(int strands, std::vector<int> twists);
  JMVector shifted_by_ones() const;  // a + (1,...,1): one full twist
};

enum class Method { Syt, Residue, Both };
enum class Convention { PadLeft, PadRight };

// Default pad-left convention: e = (0, a_1, ..., a_{n-1}); slot 1 is inert
// because z_1 specializes to 1 on every chain.  PadRight is the
// experimental alternative (a_1, ..., a_{n-1}, 0).
ExponentVector jm_to_exponents(const JMVector& a,
                               Convention conv = Convention::PadLeft);

struct Superpolynomial {
  Poly value;  // Laurent polynomial in {a, Q, T}
  JMVector jm;
  Convention convention = Convention::PadLeft;
  Method method = Method::Syt;
};

// Evaluate the triply-graded character; Method::Both runs both engine
// routes and throws MethodDisagreement if they differ.
Superpolynomial superpolynomial(const JMVector& a, Method method,
                                Convention conv = Convention::PadLeft,
                                int threads = 1);

// Per-tableau full-twist check: inserting one full twist (a -> a + 1)
// multiplies each fixed-point contribution by prod_{i>=2} z_i(t), the
// det(B) weight monomial.
struct FullTwistEntry {
  std::string tableau;
  Monomial expected_ratio;  // prod_{i>=2} weight_i(t)
  bool pass = false;
};

struct FullTwistReport {
  std::vector<FullTwistEntry> entries;
  bool all_pass = true;
};

FullTwistReport fulltwist_shift_check(const JMVector& a,
                                      Convention conv = Convention::PadLeft);

// Positivity scan over a = b + k*1 + m*rho, rho = (1, 2, ..., n-1).
struct ScanPoint {
  int k = 0, m = 0;
  std::vector<int> a;
  bool polynomial = false;
  bool positive = false;  // all coefficients nonnegative (only if polynomial)
};

struct PositivityReport {
  std::vector<ScanPoint> points;
  // Smallest m at each k from which positivity holds through the window;
  // -1 if never.  Frontier monotonicity is reported, never asserted.
  std::vector<std::pair<int, int>> frontier;  // (k, minimal m)
  bool monotone = true;
};

PositivityReport positivity_scan(const JMVector& b, int k_lo, int k_hi, int m_lo,
                                 int m_hi, int threads = 1);

}  // namespace jmh

#endif
