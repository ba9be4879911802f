#include "jmh/tableaux.hpp"

#include <algorithm>

namespace jmh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw InvariantViolation("partition parts must be weakly decreasing positives");
    n_ += parts_[i];
  }
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(n_);
  for (int r = 0; r < (int)parts_.size(); ++r)
    for (int c = 0; c < parts_[r]; ++c) out.push_back({r, c});
  return out;
}

Partition Partition::transposed() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition();
  t.resize(parts_[0], 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++t[c];
  return Partition(std::move(t));
}

uint64_t Partition::hook_count() const {
  // n! / prod hooks; compute exactly with big integers, result fits easily
  // at the sizes used here.
  Int num = 1;
  for (int i = 2; i <= n_; ++i) num *= i;
  Partition tr = transposed();
  Int den = 1;
  for (auto [r, c] : cells()) {
    int hook = (parts_[r] - c) + (tr.parts()[c] - r) - 1;
    den *= hook;
  }
  return (num / den).convert_to<uint64_t>();
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Tableau::Tableau(Partition shape, std::vector<Cell> filling)
    : shape_(std::move(shape)), filling_(std::move(filling)) {
  if ((int)filling_.size() != shape_.n())
    throw InvariantViolation("tableau filling size mismatch");
}

Monomial Tableau::weight(int i) const {
  const Cell& c = filling_[i - 1];
  return Monomial::var(VAR_Q, c.col) * Monomial::var(VAR_T, c.row);
}

std::vector<Monomial> Tableau::box_weights() const {
  std::vector<Monomial> w;
  w.reserve(n());
  for (int i = 1; i <= n(); ++i) w.push_back(weight(i));
  return w;
}

std::string Tableau::str() const {
  const auto& parts = shape_.parts();
  std::vector<std::vector<int>> rows(parts.size());
  for (size_t r = 0; r < parts.size(); ++r) rows[r].resize(parts[r], 0);
  for (int i = 1; i <= n(); ++i) rows[filling_[i - 1].row][filling_[i - 1].col] = i;
  std::string s = "[";
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) s += ",";
    s += "[";
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(rows[r][c]);
    }
    s += "]";
  }
  return s + "]";
}

std::vector<Partition> partitions(int n) {
  if (n < 1) throw InvariantViolation("partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending lex: largest first part first
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Tableau> syt_enumerate(const Partition& shape) {
  std::vector<Tableau> out;
  int n = shape.n();
  const auto& parts = shape.parts();
  std::vector<int> filled(parts.size(), 0);  // boxes filled per row
  std::vector<Cell> filling(n);
  // Place labels 1..n; label k may go at the end of any row whose length
  // allows it and whose upper neighbor column is already longer.
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(shape, filling);
      return;
    }
    for (int r = 0; r < (int)parts.size(); ++r) {
      if (filled[r] >= parts[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      filling[k - 1] = {r, filled[r]};
      ++filled[r];
      self(self, k + 1);
      --filled[r];
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Tableau> syt_all(int n) {
  std::vector<Tableau> out;
  for (const auto& p : partitions(n)) {
    auto ts = syt_enumerate(p);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

FactoredRat zeta(const Monomial& x) {
  Monomial qt = Monomial::var(VAR_Q) * Monomial::var(VAR_T);
  return FactoredRat(Poly::one(), {{x, 1}, {qt * x, 1}},
                     {{Monomial::var(VAR_Q) * x, 1}, {Monomial::var(VAR_T) * x, 1}});
}

FactoredRat zeta_tilde(const Monomial& x) {
  return FactoredRat(Poly::one(), {{x, 1}},
                     {{Monomial::var(VAR_Q) * x, 1}, {Monomial::var(VAR_T) * x, 1}});
}

}  // namespace jmh
