#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gemkit {

using Integer = mpz_class;

// Dense integer matrix, row major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

// Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  std::vector<Integer> invariant_factors;
  int rank() const { return static_cast<int>(invariant_factors.size()); }
};

SmithForm smith_normal_form(IntegerMatrix m);

// Finitely generated abelian group Z^free_rank + sum Z/torsion[k], with
// torsion coefficients > 1 in divisibility order.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  int minimal_generators() const { return free_rank + static_cast<int>(torsion.size()); }
  // "0", "Z", "Z^2 + Z/2 + Z/6"
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Z^cols / (row span of relations).
AbelianGroup cokernel(const IntegerMatrix& relations);

}  // namespace gemkit
