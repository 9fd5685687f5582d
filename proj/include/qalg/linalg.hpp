#pragma once

#include <vector>

#include "qalg/laurent.hpp"
#include "qalg/qseries.hpp"

namespace qalg {

// Dense matrices over exact coefficient domains.  Everything here is
// fraction-free: ranks and memberships over Q[q,q^-1] go through Bareiss
// elimination, whose interior divisions are exact by construction, so no
// general rational-function arithmetic is ever needed.
template <class D>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<D> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  D& at(size_t i, size_t j) { return a[i * cols + j]; }
  const D& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

namespace detail {

inline bool entry_zero(const Laurent& x) { return x.is_zero(); }
inline bool entry_zero(const Rat& x) { return is_zero(x); }
inline Laurent entry_div(const Laurent& a, const Laurent& b) {
  auto r = a.try_div(b);
  if (!r) throw Error("non-exact division in fraction-free elimination");
  return *r;
}
inline Rat entry_div(const Rat& a, const Rat& b) { return a / b; }

}  // namespace detail

// Rank via Bareiss fraction-free elimination (destroys its argument).
template <class D>
size_t bareiss_rank(Mat<D> m) {
  size_t rank = 0;
  D prev;  // previous pivot; meaningful only once rank > 0
  bool have_prev = false;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t piv = row;
    while (piv < m.rows && detail::entry_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (size_t j = col; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(row, j));
    for (size_t i = row + 1; i < m.rows; ++i) {
      for (size_t j = col + 1; j < m.cols; ++j) {
        D num = m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j);
        m.at(i, j) = have_prev ? detail::entry_div(num, prev) : num;
      }
      m.at(i, col) = D();
    }
    prev = m.at(row, col);
    have_prev = true;
    ++rank;
    ++row;
  }
  return rank;
}

// Does b lie in the column span of A over the fraction field?
template <class D>
bool in_column_span(const Mat<D>& A, const std::vector<D>& b) {
  Mat<D> aug(A.rows, A.cols + 1);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Mat<D> base = A;
  return bareiss_rank(std::move(base)) == bareiss_rank(std::move(aug));
}

template <class D>
size_t kernel_dimension(const Mat<D>& A) {
  Mat<D> copy = A;
  return A.cols - bareiss_rank(std::move(copy));
}

// Solves A x = b over the fraction field; each solution entry is returned as
// an exact numerator/denominator pair.  Requires a consistent system; returns
// nullopt when b is outside the column span.  Free variables are set to zero.
template <class D>
std::optional<std::vector<std::pair<D, D>>> solve_fraction_free(
    const Mat<D>& A, const std::vector<D>& b) {
  size_t rows = A.rows, cols = A.cols;
  Mat<D> m(rows, cols + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, cols) = b[i];
  }
  std::vector<size_t> pivot_col;
  D prev;
  bool have_prev = false;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && detail::entry_zero(m.at(piv, col))) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (size_t j = 0; j <= cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j <= cols; ++j) {
        D num = m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j);
        m.at(i, j) = have_prev ? detail::entry_div(num, prev) : num;
      }
      m.at(i, col) = D();
    }
    prev = m.at(row, col);
    have_prev = true;
    pivot_col.push_back(col);
    ++row;
  }
  // Consistency below the pivot rows.
  for (size_t i = row; i < rows; ++i)
    if (!detail::entry_zero(m.at(i, cols))) return std::nullopt;
  // Back-substitution over fractions num/den (kept unreduced).
  std::vector<std::pair<D, D>> x(cols, {D(), D(1)});
  for (size_t k = pivot_col.size(); k-- > 0;) {
    size_t pc = pivot_col[k];
    // rhs - sum_{j>pc} a_kj x_j, as a single fraction.
    D num = m.at(k, cols), den = D(1);
    for (size_t j = pc + 1; j < cols; ++j) {
      if (detail::entry_zero(m.at(k, j)) || detail::entry_zero(x[j].first))
        continue;
      num = num * x[j].second - m.at(k, j) * x[j].first * den;
      den = den * x[j].second;
    }
    x[pc] = {num, den * m.at(k, pc)};
  }
  return x;
}

// ---------------------------------------------------------------------------
// Truncated-series linear algebra.  Q[(q-1)] mod (q-1)^N is a chain ring;
// elimination picks the entry of minimal (q-1)-valuation, which makes every
// interior quotient an exact shift.

struct ChainSolveReport {
  bool solvable = false;
  int order = 0;
  // residual_norm[k]: sum of |coefficients| of the unresolvable part at
  // (q-1)-order k; all zero iff solvable.
  std::vector<Rat> residual_norms;
  size_t pivots = 0;
  int max_pivot_val = 0;  // 0 iff the span is (q-1)-saturated at this order
};

// Decides membership of b in the column span of A over Q[(q-1)]/(q-1)^N.
inline ChainSolveReport chain_membership(Mat<QSeries> m,
                                         std::vector<QSeries> b, int order) {
  ChainSolveReport rep;
  rep.order = order;
  rep.residual_norms.assign(static_cast<size_t>(order), Rat(0));
  size_t row0 = 0, col0 = 0;
  while (row0 < m.rows && col0 < m.cols) {
    // Global minimal-valuation pivot in the remaining submatrix.
    int best = order;
    size_t bi = row0, bj = col0;
    for (size_t i = row0; i < m.rows; ++i)
      for (size_t j = col0; j < m.cols; ++j) {
        int v = m.at(i, j).val();
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best >= order) break;  // remaining matrix is zero mod (q-1)^order
    for (size_t j = col0; j < m.cols; ++j) std::swap(m.at(bi, j), m.at(row0, j));
    std::swap(b[bi], b[row0]);
    for (size_t i = row0; i < m.rows; ++i) std::swap(m.at(i, bj), m.at(i, col0));
    // Normalize the pivot row so the pivot becomes exactly (q-1)^best.
    QSeries unit = m.at(row0, col0).div_eps(best).truncated(order);
    QSeries uinv = unit.invert();
    for (size_t j = col0; j < m.cols; ++j)
      m.at(row0, j) = (m.at(row0, j) * uinv).truncated(order);
    b[row0] = b[row0];  // b is untouched by column normalization
    // Clear the rest of the pivot column (all entries have val >= best).
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row0 || m.at(i, col0).is_zero()) continue;
      QSeries f = m.at(i, col0).div_eps(best).truncated(order);
      for (size_t j = col0; j < m.cols; ++j)
        m.at(i, j) = (m.at(i, j) - f * m.at(row0, j)).truncated(order);
      b[i] = (b[i] - f * b[row0]).truncated(order);
    }
    // Clear the rest of the pivot row by column operations (variable
    // re-combination; does not affect solvability or b).
    for (size_t j = col0 + 1; j < m.cols; ++j) {
      if (m.at(row0, j).is_zero()) continue;
      QSeries f = m.at(row0, j).div_eps(best).truncated(order);
      for (size_t i = row0; i < m.rows; ++i)
        m.at(i, j) = (m.at(i, j) - f * m.at(i, col0)).truncated(order);
    }
    rep.max_pivot_val = std::max(rep.max_pivot_val, best);
    ++rep.pivots;
    ++row0;
    ++col0;
  }
  // Now the system is diag((q-1)^{v_1}, ..., (q-1)^{v_r}) x' = b'.
  rep.solvable = true;
  for (size_t i = 0; i < m.rows; ++i) {
    QSeries resid = b[i];
    if (i < row0) {
      int v = m.at(i, i).val();  // pivot valuation
      // Solvable in column i iff val(b_i) >= v: the unresolvable part is
      // b_i mod (q-1)^v.
      QSeries cut(order);
      for (int k = 0; k < std::min(v, order); ++k)
        cut.coeff(k) = b[i].coeff(k);
      resid = cut;
    }
    if (!resid.is_zero()) rep.solvable = false;
    for (int k = 0; k < std::min(order, resid.order()); ++k)
      rep.residual_norms[static_cast<size_t>(k)] += abs(resid.coeff(k));
  }
  return rep;
}

}  // namespace qalg
