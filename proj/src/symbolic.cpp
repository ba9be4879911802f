#include "jmh/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace jmh {

std::string var_name(int v) {
  switch (v) {
    case VAR_A: return "a";
    case VAR_Q: return "Q";
    case VAR_T: return "T";
    case VAR_q: return "q";
    case VAR_t: return "t";
    default: return "z" + std::to_string(v - 4);
  }
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int v, int exp) {
  Monomial m;
  if (exp != 0) m.e_[v] = exp;
  return m;
}

int Monomial::exponent(int v) const {
  auto it = e_.find(v);
  return it == e_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (auto& [v, e] : o.e_) {
    int ne = r.exponent(v) + e;
    if (ne == 0)
      r.e_.erase(v);
    else
      r.e_[v] = ne;
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::inverse() const {
  Monomial r;
  for (auto& [v, e] : e_) r.e_[v] = -e;
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  for (auto& [v, e] : e_) r.e_[v] = e * k;
  return r;
}

Monomial Monomial::substituted(int v, const Monomial& value) const {
  int d = exponent(v);
  if (d == 0) return *this;
  return without(v) * value.pow(d);
}

Monomial Monomial::without(int v) const {
  Monomial r = *this;
  r.e_.erase(v);
  return r;
}

bool Monomial::greater_than_one() const {
  if (e_.empty()) return false;
  return e_.begin()->second > 0;
}

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::string s;
  bool first = true;
  for (auto& [v, e] : e_) {
    if (!first) s += "*";
    first = false;
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(Int c) {
  if (c != 0) t_[Monomial()] = std::move(c);
}

Poly::Poly(const Monomial& m, Int c) {
  if (c != 0) t_[m] = std::move(c);
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
}

std::optional<std::pair<Monomial, Int>> Poly::single_term() const {
  if (t_.size() != 1) return std::nullopt;
  return *t_.begin();
}

void Poly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Int& c) const {
  Poly r;
  if (c == 0) return r;
  for (auto& [mm, cc] : t_) r.t_[mm * m] = cc * c;
  return r;
}

Poly Poly::substituted(int v, const Monomial& value) const {
  Poly r;
  for (auto& [m, c] : t_) r.add_term(m.substituted(v, value), c);
  return r;
}

bool Poly::involves(int v) const {
  for (auto& [m, c] : t_)
    if (m.involves(v)) return true;
  return false;
}

Poly Poly::divided_by_int(const Int& d) const {
  Poly r;
  for (auto& [m, c] : t_) {
    if (c % d != 0)
      throw InvariantViolation("non-integer coefficient after scalar division");
    r.t_[m] = c / d;
  }
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    Int ac = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.is_one()) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      os << m.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------- BinomialFactor

BinomialFactor::BinomialFactor(Monomial mm) : m(std::move(mm)) {
  if (m.is_one()) throw InvariantViolation("binomial factor (1-1) is zero");
}

Poly BinomialFactor::expand() const {
  Poly p = Poly::one();
  p.add_term(m, Int(-1));
  return p;
}

std::string BinomialFactor::str() const { return "(1-" + m.str() + ")"; }

// ------------------------------------------------------------- divide_exact

std::optional<Poly> divide_exact(const Poly& f, const Monomial& m) {
  if (m.is_one()) throw InvariantViolation("division by zero factor (1-1)");
  if (f.is_zero()) return Poly::zero();
  // Main variable: the first var of m (canonical form has its exponent
  // positive when m > 1; handle either sign).
  int v = m.exponents().begin()->first;
  int k = m.exponents().begin()->second;
  // Work with m' = m or 1/m so the main exponent is positive; the factor
  // (1-m) and (1-1/m) differ by the unit -m, adjusted at the end.
  bool flipped = k < 0;
  Monomial mm = flipped ? m.inverse() : m;
  if (flipped) k = -k;

  auto vdeg = [&](const Monomial& mono) { return mono.exponent(v); };
  int minvf = 0, have = 0;
  for (auto& [mono, c] : f.terms()) {
    int d = vdeg(mono);
    if (!have || d < minvf) minvf = d;
    have = 1;
  }

  Poly r = f;
  Poly q;
  while (!r.is_zero()) {
    // Terms of maximal v-degree.
    int dmax = vdeg(r.terms().begin()->first);
    for (auto& [mono, c] : r.terms()) dmax = std::max(dmax, vdeg(mono));
    if (dmax - k < minvf) return std::nullopt;
    // Top part of quotient: -(top of r)/mm.
    Poly qpart;
    for (auto& [mono, c] : r.terms())
      if (vdeg(mono) == dmax) qpart.add_term(mono / mm, -c);
    q = q + qpart;
    // r -= qpart * (1 - mm)
    r = r - qpart + qpart.mul_term(mm, Int(1));
  }
  if (flipped) {
    // f = q*(1-1/m_orig) where m_orig = 1/mm ... we divided by (1-mm) with
    // mm = 1/m; (1-m) = -m*(1-1/m), so f/(1-m) = -(1/m)*f/(1-mm).
    q = q.mul_term(m.inverse(), Int(-1));
  }
  return q;
}

// -------------------------------------------------------------- FactoredRat

FactoredRat::FactoredRat(Poly num, FactorMultiset num_factors, FactorMultiset den_factors)
    : num_(std::move(num)), nf_(std::move(num_factors)), df_(std::move(den_factors)) {
  canonicalize();
}

FactoredRat FactoredRat::one() { return from_poly(Poly::one()); }

FactoredRat FactoredRat::from_poly(Poly p) {
  FactoredRat r;
  r.num_ = std::move(p);
  return r;
}

FactoredRat FactoredRat::from_factor(const Monomial& m) {
  return FactoredRat(Poly::one(), {{m, 1}}, {});
}

void FactoredRat::canonicalize() {
  if (num_.is_zero()) {
    nf_.clear();
    df_.clear();
    return;
  }
  // Canonical factor form: (1-m) with m > 1.  (1-m) = -m*(1-1/m), so a
  // sub-unit factor is replaced and the unit folded into the numerator.
  auto normalize = [&](FactorMultiset& fs, bool denominator) {
    FactorMultiset out;
    for (auto& [m, k] : fs) {
      if (m.is_one()) throw InvariantViolation("zero binomial factor");
      if (m.greater_than_one()) {
        out[m] += k;
      } else {
        Monomial unit = denominator ? m.inverse() : m;
        Int sign = (k % 2 == 0) ? 1 : -1;
        num_ = num_.mul_term(unit.pow(k), sign);
        out[m.inverse()] += k;
      }
    }
    fs = std::move(out);
  };
  normalize(nf_, false);
  normalize(df_, true);
  // Cancel identical factors between numerator and denominator.
  for (auto it = nf_.begin(); it != nf_.end();) {
    auto jt = df_.find(it->first);
    if (jt != df_.end()) {
      int c = std::min(it->second, jt->second);
      it->second -= c;
      jt->second -= c;
      if (jt->second == 0) df_.erase(jt);
    }
    if (it->second == 0)
      it = nf_.erase(it);
    else
      ++it;
  }
}

FactoredRat FactoredRat::mul(const FactoredRat& o) const {
  FactorMultiset nf = nf_, df = df_;
  for (auto& [m, k] : o.nf_) nf[m] += k;
  for (auto& [m, k] : o.df_) df[m] += k;
  return FactoredRat(num_ * o.num_, std::move(nf), std::move(df));
}

FactoredRat FactoredRat::mul_poly(const Poly& p) const {
  return FactoredRat(num_ * p, nf_, df_);
}

FactoredRat FactoredRat::mul_term(const Monomial& m, const Int& c) const {
  return FactoredRat(num_.mul_term(m, c), nf_, df_);
}

FactoredRat FactoredRat::neg() const { return FactoredRat(-num_, nf_, df_); }

Poly FactoredRat::expand_numerator() const {
  Poly p = num_;
  for (auto& [m, k] : nf_)
    for (int i = 0; i < k; ++i) p = p * BinomialFactor(m).expand();
  return p;
}

FactoredRat FactoredRat::add(const FactoredRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // lcm-style common denominator: multiset max.
  FactorMultiset den;
  for (auto& [m, k] : df_) den[m] = k;
  for (auto& [m, k] : o.df_) den[m] = std::max(den[m], k);
  Poly na = expand_numerator();
  Poly nb = o.expand_numerator();
  for (auto& [m, k] : den) {
    int ka = k - (df_.count(m) ? df_.at(m) : 0);
    int kb = k - (o.df_.count(m) ? o.df_.at(m) : 0);
    Poly bin = BinomialFactor(m).expand();
    for (int i = 0; i < ka; ++i) na = na * bin;
    for (int i = 0; i < kb; ++i) nb = nb * bin;
  }
  FactoredRat r(na + nb, {}, std::move(den));
  r.simplify();
  return r;
}

FactoredRat FactoredRat::sub(const FactoredRat& o) const { return add(o.neg()); }

bool FactoredRat::equals(const FactoredRat& o) const { return sub(o).is_zero(); }

void FactoredRat::simplify() {
  if (num_.is_zero()) {
    nf_.clear();
    df_.clear();
    return;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = df_.begin(); it != df_.end(); ++it) {
      if (auto q = divide_exact(num_, it->first)) {
        num_ = std::move(*q);
        if (--it->second == 0) df_.erase(it);
        progress = true;
        break;
      }
    }
  }
}

FactoredRat FactoredRat::substituted(int v, const Monomial& value) const {
  if (is_zero()) return zero();
  Poly num = num_.substituted(v, value);
  FactorMultiset nf, df;
  for (auto& [m, k] : nf_) {
    Monomial s = m.substituted(v, value);
    if (s.is_one()) {
      // factor becomes (1-1) = 0: whole value is zero
      return zero();
    }
    nf[s] += k;
  }
  for (auto& [m, k] : df_) {
    Monomial s = m.substituted(v, value);
    if (s.is_one())
      throw ZeroDenominator("denominator factor " + BinomialFactor(m).str() +
                            " vanishes under " + var_name(v) + " -> " + value.str());
    df[s] += k;
  }
  return FactoredRat(std::move(num), std::move(nf), std::move(df));
}

bool FactoredRat::is_polynomial() const {
  if (is_zero()) return true;
  Poly p = expand_numerator();
  for (auto& [m, k] : df_) {
    for (int i = 0; i < k; ++i) {
      auto q = divide_exact(p, m);
      if (!q) return false;
      p = std::move(*q);
    }
  }
  return true;
}

Poly FactoredRat::to_polynomial() const {
  if (is_zero()) return Poly::zero();
  Poly p = expand_numerator();
  std::string surviving;
  for (auto& [m, k] : df_) {
    for (int i = 0; i < k; ++i) {
      auto q = divide_exact(p, m);
      if (!q) {
        surviving += (surviving.empty() ? "" : ", ") + BinomialFactor(m).str();
        break;
      }
      p = std::move(*q);
    }
  }
  if (!surviving.empty())
    throw NonPolynomialResult("surviving denominator factors: " + surviving);
  return p;
}

std::string FactoredRat::str() const {
  std::string s = num_.str();
  if (!nf_.empty()) {
    if (num_.terms().size() > 1) s = "(" + s + ")";
    for (auto& [m, k] : nf_) {
      s += " * " + BinomialFactor(m).str();
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  if (!df_.empty()) {
    s += " / [";
    bool first = true;
    for (auto& [m, k] : df_) {
      if (!first) s += ", ";
      first = false;
      s += BinomialFactor(m).str() + "^" + std::to_string(k);
    }
    s += "]";
  }
  return s;
}

// ---------------------------------------------------------------- pole_set

std::map<Monomial, int> pole_set(const FactoredRat& f, int v) {
  std::map<Monomial, int> poles;
  for (auto& [m, k] : f.den_factors()) {
    int d = m.exponent(v);
    if (d == 0) continue;
    Monomial c = m.without(v);  // factor is (1 - c v^d); pole v = c^{-1/d}
    Monomial p;
    for (auto& [vv, e] : c.exponents()) {
      if (e % d != 0)
        throw NonMonomialPole("pole of " + BinomialFactor(m).str() + " in " +
                              var_name(v) + " is not a Laurent monomial");
      p = p * Monomial::var(vv, -e / d);
    }
    poles[p] += k;
  }
  return poles;
}

// ------------------------------------------------------------- residue_dlog

namespace {

// Truncated power series in a local parameter eps, with FactoredRat
// coefficients over a common integer denominator:
//   value = eps^shift * (c[0] + c[1] eps + ...) / den
struct EpsSeries {
  int shift = 0;
  std::vector<FactoredRat> c;
  Int den = 1;
};

// Generalized binomial coefficient C(d, k) for integer d (any sign), k >= 0.
Int binom(long d, long k) {
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= Int(d - i);
    den *= Int(i + 1);
  }
  return num / den;  // always exact
}

EpsSeries series_mul(const EpsSeries& x, const EpsSeries& y, int len) {
  EpsSeries r;
  r.shift = x.shift + y.shift;
  r.den = x.den * y.den;
  r.c.assign(len, FactoredRat::zero());
  for (int i = 0; i < (int)x.c.size() && i < len; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < (int)y.c.size() && i + j < len; ++j) {
      if (y.c[j].is_zero()) continue;
      r.c[i + j] = r.c[i + j].add(x.c[i].mul(y.c[j]));
    }
  }
  return r;
}

// Invert a series whose leading coefficient c[0] has a single-term
// expanded numerator (k * monomial times binomial factors).
EpsSeries series_invert(const EpsSeries& s, int len) {
  if (s.c.empty() || s.c[0].is_zero())
    throw InvariantViolation("series inversion with vanishing leading coefficient");
  const FactoredRat& c0 = s.c[0];
  auto lead = c0.numerator().single_term();
  if (!lead)
    throw InvariantViolation("series inversion needs a single-term leading numerator");
  auto [mono, coeff] = *lead;
  // inv0 = 1/c0 up to the integer scalar |coeff|
  Int k = coeff < 0 ? Int(-coeff) : coeff;
  Int sign = coeff < 0 ? -1 : 1;
  FactoredRat inv0(Poly(mono.inverse(), sign), c0.den_factors(), c0.num_factors());
  // U = c0 (1 + B) with k*B' = k * inv0 * (U - c0) integer-clean:
  // B'_j = inv0 * c_j  =>  U^{-1} = inv0/k * sum_j (-B')^j / k^j.
  std::vector<FactoredRat> bp(len, FactoredRat::zero());
  for (int j = 1; j < (int)s.c.size() && j < len; ++j) bp[j] = inv0.mul(s.c[j]);
  // Accumulate sum_j (-B')^j k^{len-1-j} over common denominator k^{len-1}.
  std::vector<FactoredRat> acc(len, FactoredRat::zero());
  std::vector<FactoredRat> pw(len, FactoredRat::zero());
  pw[0] = FactoredRat::one();
  Int kp = 1;  // k^{len-1-j} built downward
  for (int j = len - 2; j >= 0; --j) kp *= k;
  Int kfac = kp;  // k^{len-1}
  for (int j = 0; j < len; ++j) {
    for (int i = 0; i < len; ++i)
      if (!pw[i].is_zero()) acc[i] = acc[i].add(pw[i].mul_poly(Poly(kp)));
    if (j + 1 < len) {
      // pw *= -B'
      std::vector<FactoredRat> np(len, FactoredRat::zero());
      for (int i = 0; i < len; ++i) {
        if (pw[i].is_zero()) continue;
        for (int l = 1; i + l < len; ++l)
          if (!bp[l].is_zero()) np[i + l] = np[i + l].add(pw[i].mul(bp[l]).neg());
      }
      pw = std::move(np);
      if (k != 1) kp /= k;
    }
  }
  EpsSeries r;
  r.shift = -s.shift;
  r.den = k * kfac;
  r.c.assign(len, FactoredRat::zero());
  for (int i = 0; i < len; ++i)
    if (!acc[i].is_zero()) r.c[i] = acc[i].mul(inv0);
  // s.den moves to the numerator of the inverse.
  if (s.den != 1)
    for (auto& cc : r.c) cc = cc.mul_poly(Poly(s.den));
  return r;
}

// Series of a binomial factor (1 - m) under v -> pole*(1+eps), where
// d = deg_v(m) and u = m|_{v=pole}.
EpsSeries factor_series(const Monomial& m, int v, const Monomial& pole, int len) {
  int d = m.exponent(v);
  Monomial u = m.substituted(v, pole);
  EpsSeries s;
  s.c.assign(len, FactoredRat::zero());
  if (u.is_one()) {
    // 1 - (1+eps)^d = -sum_{k>=1} C(d,k) eps^k, vanishing to order 1.
    s.shift = 1;
    for (int k = 0; k < len; ++k) {
      Int b = binom(d, k + 1);
      if (b != 0) s.c[k] = FactoredRat::from_poly(Poly(-b));
    }
  } else {
    // (1-u) - u * sum_{k>=1} C(d,k) eps^k
    s.shift = 0;
    s.c[0] = FactoredRat::from_factor(u);
    for (int k = 1; k < len; ++k) {
      Int b = binom(d, k);
      if (b != 0) s.c[k] = FactoredRat::from_poly(Poly(u, -b));
    }
  }
  return s;
}

// Series of an expanded Laurent polynomial under v -> pole*(1+eps).
EpsSeries poly_series(const Poly& p, int v, const Monomial& pole, int len) {
  EpsSeries s;
  s.shift = 0;
  std::vector<Poly> coeffs(len);
  for (auto& [m, c] : p.terms()) {
    int d = m.exponent(v);
    Monomial rest = m.substituted(v, pole);
    for (int k = 0; k < len; ++k) {
      Int b = binom(d, k);
      if (b != 0) coeffs[k].add_term(rest, c * b);
    }
  }
  s.c.reserve(len);
  for (auto& cp : coeffs) s.c.push_back(FactoredRat::from_poly(std::move(cp)));
  return s;
}

}  // namespace

FactoredRat residue_dlog(const FactoredRat& f, int v, const Monomial& pole) {
  if (f.is_zero()) return FactoredRat::zero();
  if (pole.involves(v))
    throw InvariantViolation("pole location involves the integration variable");
  // Count vanishing denominator factors: truncation bound = total pole order.
  int order = 0;
  for (auto& [m, k] : f.den_factors())
    if (m.substituted(v, pole).is_one()) order += k;
  if (order == 0) return FactoredRat::zero();  // not a pole
  int len = order;  // need coefficients eps^0 .. eps^{order-1}

  // Numerator poly, numerator factors kept factored (their series are
  // short and this avoids exponential expansion), inverted denominator
  // factors, then the dlog Jacobian 1/(1+eps).
  EpsSeries acc = poly_series(f.numerator(), v, pole, len);
  for (auto& [m, k] : f.num_factors()) {
    EpsSeries fs = factor_series(m, v, pole, len);
    for (int i = 0; i < k; ++i) acc = series_mul(acc, fs, len);
  }
  for (auto& [m, k] : f.den_factors()) {
    EpsSeries fs = factor_series(m, v, pole, len);
    EpsSeries inv = series_invert(fs, len);
    for (int i = 0; i < k; ++i) acc = series_mul(acc, inv, len);
  }
  {
    EpsSeries jac;
    jac.shift = 0;
    jac.c.assign(len, FactoredRat::zero());
    for (int k = 0; k < len; ++k)
      jac.c[k] = FactoredRat::from_poly(Poly(k % 2 ? Int(-1) : Int(1)));
    acc = series_mul(acc, jac, len);
  }
  int idx = -1 - acc.shift;
  if (idx < 0) return FactoredRat::zero();
  if (idx >= len)
    throw InversionDepthExceeded("residue index beyond truncation bound");
  FactoredRat r = acc.c[idx];
  if (r.is_zero()) return r;
  Int den = acc.den < 0 ? Int(-acc.den) : acc.den;
  if (acc.den < 0) r = r.neg();
  if (den != 1)
    r = FactoredRat(r.numerator().divided_by_int(den), r.num_factors(), r.den_factors());
  r.simplify();
  return r;
}

FactoredRat residue_dlog_simple(const FactoredRat& f, int v, const Monomial& pole) {
  if (f.is_zero()) return FactoredRat::zero();
  // Locate the unique vanishing denominator factor; requires order 1.
  const Monomial* van = nullptr;
  int count = 0;
  for (auto& [m, k] : f.den_factors()) {
    if (m.substituted(v, pole).is_one()) {
      van = &m;
      count += k;
    }
  }
  if (count == 0) return FactoredRat::zero();
  if (count != 1)
    throw InvariantViolation("simple-pole path requires a pole of order 1");
  int d = van->exponent(v);
  if (d != 1 && d != -1)
    throw InvariantViolation("simple-pole path requires |deg| = 1 in the variable");
  // (1 - c v^d) ~ -d*eps near v = pole; residue = (-1/d) * rest(pole).
  FactorMultiset df = f.den_factors();
  if (--df[*van] == 0) df.erase(*van);
  FactoredRat rest(f.numerator(), f.num_factors(), df);
  FactoredRat val = rest.substituted(v, pole);
  FactoredRat r = d == 1 ? val.neg() : val;
  r.simplify();
  return r;
}

// ------------------------------------------------------------ specializations

Poly specialize_qt(const Poly& f) {
  Poly r;
  for (auto& [m, c] : f.terms()) {
    Monomial out;
    for (auto& [v, e] : m.exponents()) {
      switch (v) {
        case VAR_A:
          out = out * Monomial::var(VAR_A, e);
          break;
        case VAR_Q:  // Q = q^2
          out = out * Monomial::var(VAR_q, 2 * e);
          break;
        case VAR_T:  // T = t^2/q^2
          out = out * Monomial::var(VAR_t, 2 * e) * Monomial::var(VAR_q, -2 * e);
          break;
        default:
          throw UnexpectedVariable("specialize_qt: unexpected variable " + var_name(v));
      }
    }
    r.add_term(out, c);
  }
  return r;
}

Poly swap_qt(const Poly& f) {
  Poly r;
  for (auto& [m, c] : f.terms()) {
    Monomial out;
    for (auto& [v, e] : m.exponents()) {
      int nv = v == VAR_Q ? VAR_T : v == VAR_T ? VAR_Q : v;
      out = out * Monomial::var(nv, e);
    }
    r.add_term(out, c);
  }
  return r;
}

}  // namespace jmh
