#include "jmh/engine.hpp"

#include <mutex>
#include <thread>

namespace jmh {

FactoredRat integrand(const ExponentVector& e, KernelForm kernel) {
  int n = e.n();
  if (n < 1) throw InvariantViolation("integrand: n must be positive");
  FactoredRat f = FactoredRat::one();
  for (int i = 1; i <= n; ++i) {
    Monomial zi = Monomial::var(z_var(i));
    // z_i^{e_i} (1 + a z_i^{-1}) / (1 - z_i^{-1})
    Poly num(zi.pow(e.e[i - 1]));
    num = num + Poly(zi.pow(e.e[i - 1] - 1) * Monomial::var(VAR_A));
    f = f.mul(FactoredRat(std::move(num), {}, {{zi.inverse(), 1}}));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Monomial x = Monomial::var(z_var(i)) / Monomial::var(z_var(j));
      if (kernel == KernelForm::Zeta) {
        f = f.mul(zeta(x));
      } else {
        // K^even class factor (1 - QT z_i/z_j) times the push-forward kernel
        Monomial qt = Monomial::var(VAR_Q) * Monomial::var(VAR_T);
        f = f.mul(zeta_tilde(x)).mul(FactoredRat::from_factor(qt * x));
      }
    }
  }
  return f;
}

namespace {

// Enclosed poles in z_k: location 1, or exactly Q*z_i / T*z_i with i < k.
bool pole_enclosed(const Monomial& p, int k) {
  if (p.is_one()) return true;
  const auto& e = p.exponents();
  if (e.size() != 2) return false;
  auto it = e.begin();
  auto [v1, e1] = *it;
  auto [v2, e2] = *++it;
  if ((v1 != VAR_Q && v1 != VAR_T) || e1 != 1) return false;
  if (!is_z_var(v2) || e2 != 1) return false;
  return v2 < z_var(k);
}

}  // namespace

std::vector<FactoredRat> pushforward_residues(const FactoredRat& f, int k,
                                              AuditReport* audit) {
  std::vector<FactoredRat> out;
  int v = z_var(k);
  for (auto& [p, order] : pole_set(f, v)) {
    if (pole_enclosed(p, k)) {
      FactoredRat r = residue_dlog(f, v, p);
      if (!r.is_zero()) out.push_back(std::move(r));
    } else if (audit) {
      ++audit->poles_checked;
      // Raw per-term residues; evaluate_full aggregates per (step, pole)
      // since cancellation only happens in the sum over terms.
      FactoredRat r = residue_dlog(f, v, p);
      if (!r.is_zero()) audit->nonzero.push_back({k, p, std::move(r)});
    }
  }
  return out;
}

FactoredRat pushforward_step(const FactoredRat& f, int k) {
  FactoredRat sum = FactoredRat::zero();
  for (auto& r : pushforward_residues(f, k)) sum = sum.add(r);
  return sum;
}

namespace {

Poly combine_and_expand(std::vector<FactoredRat>& terms, const char* what) {
  FactoredRat sum = FactoredRat::zero();
  for (auto& t : terms) sum = sum.add(t);
  try {
    return sum.to_polynomial();
  } catch (const NonPolynomialResult& e) {
    throw NonPolynomialResult(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Poly evaluate_full(const ExponentVector& e, KernelForm kernel, AuditReport* audit) {
  int n = e.n();
  std::vector<FactoredRat> terms{integrand(e, kernel)};
  for (int k = n; k >= 1; --k) {
    std::vector<FactoredRat> next;
    for (auto& t : terms) {
      auto parts = pushforward_residues(t, k, audit);
      next.insert(next.end(), std::make_move_iterator(parts.begin()),
                  std::make_move_iterator(parts.end()));
    }
    terms = std::move(next);
  }
  if (audit) {
    std::map<std::pair<int, Monomial>, FactoredRat> totals;
    for (auto& entry : audit->nonzero) {
      auto key = std::make_pair(entry.step, entry.pole);
      auto it = totals.find(key);
      if (it == totals.end())
        totals.emplace(key, entry.residue);
      else
        it->second = it->second.add(entry.residue);
    }
    audit->nonzero.clear();
    for (auto& [key, total] : totals)
      if (!total.is_zero()) audit->nonzero.push_back({key.first, key.second, total});
  }
  Poly result = combine_and_expand(terms, "evaluate_full");
  for (int k = 1; k <= n; ++k)
    if (result.involves(z_var(k)))
      throw InvariantViolation("evaluate_full: z variable survives");
  return result;
}

ResidueChain tableau_chain(const Tableau& t) {
  ResidueChain chain;
  auto weights = t.box_weights();
  for (int i = 1; i <= t.n(); ++i) {
    ChainStep step;
    step.step = i;
    step.value = weights[i - 1];
    const Cell& c = t.filling()[i - 1];
    if (c.row == 0 && c.col == 0) {
      step.origin = PoleOrigin::Unit;
    } else if (c.col > 0) {
      step.origin = PoleOrigin::QPole;
      Cell left{c.row, c.col - 1};
      for (int j = 1; j < i; ++j)
        if (t.filling()[j - 1] == left) step.parent = j;
    } else {
      step.origin = PoleOrigin::TPole;
      Cell up{c.row - 1, c.col};
      for (int j = 1; j < i; ++j)
        if (t.filling()[j - 1] == up) step.parent = j;
    }
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

FactoredRat evaluate_tableau(const ExponentVector& e, const Tableau& t) {
  if (e.n() != t.n()) throw InvariantViolation("exponent/tableau size mismatch");
  FactoredRat f = integrand(e);
  auto weights = t.box_weights();
  for (int i = 1; i <= t.n(); ++i) {
    f = residue_dlog(f, z_var(i), weights[i - 1]);
    if (f.is_zero()) return f;
  }
  return f;
}

Poly evaluate_syt_sum(const ExponentVector& e, int threads) {
  auto tableaux = syt_all(e.n());
  std::vector<FactoredRat> terms(tableaux.size());
  if (threads == 0) threads = (int)std::thread::hardware_concurrency();
  if (threads <= 1 || tableaux.size() < 2) {
    for (size_t i = 0; i < tableaux.size(); ++i)
      terms[i] = evaluate_tableau(e, tableaux[i]);
  } else {
    std::mutex mu;
    size_t next = 0;
    auto worker = [&]() {
      for (;;) {
        size_t i;
        {
          std::lock_guard<std::mutex> lk(mu);
          if (next >= tableaux.size()) return;
          i = next++;
        }
        terms[i] = evaluate_tableau(e, tableaux[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Poly result = combine_and_expand(terms, "evaluate_syt_sum");
  return result;
}

}  // namespace jmh
