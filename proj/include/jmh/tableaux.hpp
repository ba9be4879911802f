#ifndef JMH_TABLEAUX_HPP
#define JMH_TABLEAUX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jmh/symbolic.hpp"

// Partitions, standard Young tableaux with co-arm/co-leg statistics, the
// torus fixed-point weights Q^{a'} T^{l'}, and the zeta kernels.

namespace jmh {

struct Cell {
  int row = 0;  // 0-based; co-leg l' = row
  int col = 0;  // 0-based; co-arm a' = col
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::vector<Cell> cells() const;  // row-major
  Partition transposed() const;
  uint64_t hook_count() const;  // number of SYT, by the hook length formula

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::string str() const;

 private:
  std::vector<int> parts_;  // weakly decreasing, positive
  int n_ = 0;
};

// Standard Young tableau: filling[i-1] is the cell of label i.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<Cell> filling);

  const Partition& shape() const { return shape_; }
  const std::vector<Cell>& filling() const { return filling_; }
  int n() const { return shape_.n(); }

  // Weight of box i (1-based): Q^{col} T^{row}.
  Monomial weight(int i) const;
  std::vector<Monomial> box_weights() const;

  std::string str() const;  // row-lists of labels, e.g. [[1,2],[3]]

 private:
  Partition shape_;
  std::vector<Cell> filling_;
};

// All partitions of n, lexicographically descending by parts ((n) first).
std::vector<Partition> partitions(int n);

// All SYT of the shape, deterministic order.
std::vector<Tableau> syt_enumerate(const Partition& shape);

// All SYT of size n, grouped by the partition order.
std::vector<Tableau> syt_all(int n);

// zeta(x) = (1-x)(1-QTx) / ((1-Qx)(1-Tx))
FactoredRat zeta(const Monomial& x);

// zeta_tilde(x) = (1-x) / ((1-Qx)(1-Tx))
FactoredRat zeta_tilde(const Monomial& x);

}  // namespace jmh

#endif
