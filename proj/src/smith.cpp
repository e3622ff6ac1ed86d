#include "gemkit/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gemkit {

namespace {

void swap_rows(IntegerMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Finds the nonzero entry of smallest magnitude in the trailing submatrix.
bool find_pivot(const IntegerMatrix& m, int t, int& pr, int& pc) {
  bool found = false;
  Integer best;
  for (int r = t; r < m.rows(); ++r) {
    for (int c = t; c < m.cols(); ++c) {
      const Integer& x = m(r, c);
      if (sgn(x) == 0) continue;
      if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
        best = x;
        pr = r;
        pc = c;
        found = true;
        if (best == 1 || best == -1) return true;
      }
    }
  }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  SmithForm out;
  const int limit = std::min(m.rows(), m.cols());
  Integer q;
  for (int t = 0; t < limit; ++t) {
    int pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    for (;;) {
      bool clean = true;
      // Clear column t below the pivot.
      for (int r = t + 1; r < m.rows(); ++r) {
        if (sgn(m(r, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (int c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
        if (sgn(m(r, t)) != 0) {
          swap_rows(m, t, r);
          clean = false;
        }
      }
      // Clear row t right of the pivot.
      for (int c = t + 1; c < m.cols(); ++c) {
        if (sgn(m(t, c)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (int r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
        if (sgn(m(t, c)) != 0) {
          swap_cols(m, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      int bad_r = -1;
      for (int r = t + 1; r < m.rows() && bad_r < 0; ++r)
        for (int c = t + 1; c < m.cols(); ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad_r = r;
            break;
          }
      if (bad_r < 0) break;
      for (int c = t; c < m.cols(); ++c) m(t, c) += m(bad_r, c);
    }
    Integer d = abs(m(t, t));
    out.invariant_factors.push_back(d);
  }
  return out;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel(const IntegerMatrix& relations) {
  const SmithForm snf = smith_normal_form(relations);
  AbelianGroup g;
  g.free_rank = relations.cols() - snf.rank();
  for (const auto& d : snf.invariant_factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

}  // namespace gemkit
