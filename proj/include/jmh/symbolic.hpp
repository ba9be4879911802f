#ifndef JMH_SYMBOLIC_HPP
#define JMH_SYMBOLIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic for Laurent polynomials in the grading variables
// {a, Q, T} (and q, t after regrading) plus auxiliary contour variables
// z_1..z_n, together with rational functions whose denominators are
// products of binomials (1 - monomial).  All coefficients are
// arbitrary-precision integers; there is no floating point anywhere.

namespace jmh {

using Int = boost::multiprecision::cpp_int;

// Variable ids.  The numeric order a < Q < T < q < t < z_1 < z_2 < ...
// is the canonical variable order used for serialization.
enum : int { VAR_A = 0, VAR_Q = 1, VAR_T = 2, VAR_q = 3, VAR_t = 4 };
inline int z_var(int i) { return 4 + i; }  // z_i, i >= 1
inline bool is_z_var(int v) { return v > VAR_t; }
std::string var_name(int v);

struct ZeroDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonMonomialPole : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonPolynomialResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnexpectedVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InversionDepthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Laurent monomial: map var-id -> nonzero integer exponent.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int v, int exp = 1);

  const std::map<int, int>& exponents() const { return e_; }
  int exponent(int v) const;
  bool is_one() const { return e_.empty(); }
  bool involves(int v) const { return e_.count(v) != 0; }

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;

  // Substitute v -> value (exact; exponent of v folds into value^exp).
  Monomial substituted(int v, const Monomial& value) const;
  // Drop variable v entirely (used when its value has been folded elsewhere).
  Monomial without(int v) const;

  // Lexicographic by var id; total order.  m > 1 iff the first nonzero
  // exponent is positive; exactly one of m, 1/m exceeds 1 when m != 1.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }
  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  bool greater_than_one() const;

  std::string str() const;

 private:
  std::map<int, int> e_;  // no zero entries
};

// Integer-coefficient Laurent polynomial; canonical form stores no zero
// coefficients, so equality is term-map equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int c);                      // constant
  Poly(const Monomial& m, Int c = Int(1));   // single term

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Int(1)); }

  const std::map<Monomial, Int>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  // If the polynomial is a single term, return it.
  std::optional<std::pair<Monomial, Int>> single_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Monomial& m, const Int& c) const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return t_ != o.t_; }

  Poly substituted(int v, const Monomial& value) const;
  bool involves(int v) const;
  // Exact division of every coefficient by d; throws InvariantViolation
  // if any coefficient is not divisible.
  Poly divided_by_int(const Int& d) const;

  void add_term(const Monomial& m, const Int& c);

  std::string str() const;

 private:
  std::map<Monomial, Int> t_;
};

// The binomial (1 - m); m == 1 is forbidden.
struct BinomialFactor {
  Monomial m;
  explicit BinomialFactor(Monomial mm);
  Poly expand() const;  // 1 - m
  std::string str() const;
};

using FactorMultiset = std::map<Monomial, int>;  // monomial -> multiplicity

// numerator * prod num_factors / prod den_factors.  On construction,
// factors are canonicalized so that m > 1 (folding the unit -m into the
// numerator) and identical factors shared between numerator and
// denominator are cancelled.
class FactoredRat {
 public:
  FactoredRat() = default;  // zero
  FactoredRat(Poly num, FactorMultiset num_factors, FactorMultiset den_factors);

  static FactoredRat zero() { return FactoredRat(); }
  static FactoredRat one();
  static FactoredRat from_poly(Poly p);
  // (1 - m) as a factored numerator.
  static FactoredRat from_factor(const Monomial& m);

  const Poly& numerator() const { return num_; }
  const FactorMultiset& num_factors() const { return nf_; }
  const FactorMultiset& den_factors() const { return df_; }
  bool is_zero() const { return num_.is_zero(); }

  FactoredRat mul(const FactoredRat& o) const;
  FactoredRat mul_poly(const Poly& p) const;
  FactoredRat mul_term(const Monomial& m, const Int& c) const;
  FactoredRat neg() const;
  // Common-denominator addition; the result's numerator is expanded and
  // spurious denominator factors are divided out when possible.
  FactoredRat add(const FactoredRat& o) const;
  FactoredRat sub(const FactoredRat& o) const;
  // Equality as rational functions (cross multiplication).
  bool equals(const FactoredRat& o) const;

  // Exact substitution v -> value.  Throws ZeroDenominator if a
  // denominator factor vanishes identically.
  FactoredRat substituted(int v, const Monomial& value) const;

  // numerator * prod num_factors, fully expanded.
  Poly expand_numerator() const;
  // True iff every denominator factor divides the expanded numerator.
  bool is_polynomial() const;
  // Expand and divide out all denominator factors; throws
  // NonPolynomialResult (message lists surviving factors) otherwise.
  Poly to_polynomial() const;

  // Divide out denominator factors that divide the numerator exactly.
  void simplify();

  std::string str() const;

 private:
  Poly num_;
  FactorMultiset nf_, df_;
  void canonicalize();
};

// Exact division of f by (1 - m): returns the quotient iff it exists.
std::optional<Poly> divide_exact(const Poly& f, const Monomial& m);

// Poles of f in variable v, read off the denominator factors
// (1 - c v^d): location v = c^{-1/d} with its total order.  Throws
// NonMonomialPole when a location is not a Laurent monomial.
std::map<Monomial, int> pole_set(const FactoredRat& f, int v);

// Res_{v = pole} f(v) dv/v, by local expansion v = pole*(1+eps); exact,
// any pole order.  A regular point yields zero.
FactoredRat residue_dlog(const FactoredRat& f, int v, const Monomial& pole);

// Independent simple-pole path (order-1 poles from a single vanishing
// denominator factor); used to cross-check residue_dlog.
FactoredRat residue_dlog_simple(const FactoredRat& f, int v, const Monomial& pole);

// Regrade Q -> q^2, T -> t^2/q^2; input must involve only {a, Q, T}.
Poly specialize_qt(const Poly& f);

// Exponent swap Q <-> T.
Poly swap_qt(const Poly& f);

}  // namespace jmh

#endif
