#ifndef JMH_ENGINE_HPP
#define JMH_ENGINE_HPP

#include <string>
#include <vector>

#include "jmh/symbolic.hpp"
#include "jmh/tableaux.hpp"

// Iterated-residue evaluation of the contour integral
//   int ... int prod_i z_i^{e_i} (1 + a/z_i) / (1 - 1/z_i)
//              * prod_{i<j} zeta(z_i/z_j)  dz_1/z_1 ... dz_n/z_n
// by two independent routes: descending push-forward over enclosed poles,
// and ascending per-tableau residue chains summed over all SYT.

namespace jmh {

struct NonPolynomialSum : NonPolynomialResult {
  using NonPolynomialResult::NonPolynomialResult;
};

// Exponent of z_i in the integrand factor prod z_i^{e_i}.  e[0] attaches
// to z_1, which specializes to 1 on every chain; its irrelevance is a
// tested property, not an assumption.
struct ExponentVector {
  std::vector<int> e;
  int n() const { return (int)e.size(); }
};

enum class PoleOrigin { Unit, QPole, TPole };

// One step of an ascending residue chain: z_step was set to `value`, a
// pure {Q,T} monomial; Q/T poles reference the earlier variable whose
// box sits immediately left of/above this one.
struct ChainStep {
  int step = 0;
  Monomial value;
  PoleOrigin origin = PoleOrigin::Unit;
  int parent = 0;  // earlier box label for Q/T poles, 0 for the unit pole
};

struct ResidueChain {
  std::vector<ChainStep> steps;
};

// Which pairwise kernel to expand in the integrand; both describe the same
// rational function (zeta(x) = zeta_tilde(x) * (1 - QT x)) and their
// agreement downstream is an acceptance criterion.
enum class KernelForm { Zeta, ZetaTildeTimesKEven };

// The full integrand as a single FactoredRat (measure factors dz/z live in
// the residue operator, not here).
FactoredRat integrand(const ExponentVector& e, KernelForm kernel = KernelForm::Zeta);

// Nonzero residues found at poles outside the enclosed set, when audit
// mode is on.  A nonzero entry means the contour rule dropped something.
struct AuditEntry {
  int step = 0;
  Monomial pole;
  FactoredRat residue;
};

struct AuditReport {
  std::vector<AuditEntry> nonzero;
  int poles_checked = 0;
};

// One descending push-forward step in z_k: sum of residues over the
// enclosed poles {z_k = 1} u {z_k = Q z_i, T z_i : i < k}.
FactoredRat pushforward_step(const FactoredRat& f, int k);

// Residues of a single term at its enclosed poles in z_k, kept as a formal
// sum (combining early would blow up numerators).
std::vector<FactoredRat> pushforward_residues(const FactoredRat& f, int k,
                                              AuditReport* audit = nullptr);

// Iterated integral, descending z_n .. z_1; asserts the result is a
// Laurent polynomial in {a, Q, T} (throws NonPolynomialResult otherwise).
Poly evaluate_full(const ExponentVector& e, KernelForm kernel = KernelForm::Zeta,
                   AuditReport* audit = nullptr);

// Ascending residue chain at z_i = box_weights(t)[i]; the per-tableau
// value is a genuine rational function in general.
FactoredRat evaluate_tableau(const ExponentVector& e, const Tableau& t);

// The residue chain of a tableau, with per-step provenance.
ResidueChain tableau_chain(const Tableau& t);

// Localization-style sum over all SYT of size n; asserts polynomiality.
// threads = 0 means hardware concurrency, 1 means sequential.
Poly evaluate_syt_sum(const ExponentVector& e, int threads = 1);

}  // namespace jmh

#endif
