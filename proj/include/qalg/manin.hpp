#pragma once

#include "qalg/presentation.hpp"
#include "qalg/scalar.hpp"

namespace qalg {

// Orientation of the deformation parameter.  The defining relations are
// sometimes written with q and q^-1 exchanged; `inverted` applies that swap
// consistently everywhere.
enum class QConv { standard, inverted };

inline LocScalar q_of(QConv conv, long e = 1) {
  return LocScalar::q(conv == QConv::standard ? e : -e);
}

// Generator bookkeeping for the m-by-n quantum matrix algebra: x[i,j] with
// 1-based indices, ordered row-major (x[1,1] < x[1,2] < ... < x[m,n]).
struct MatrixCtx {
  int m = 0, n = 0;
  QConv conv = QConv::standard;

  MatrixCtx(int rows, int cols, QConv c = QConv::standard)
      : m(rows), n(cols), conv(c) {
    if (rows < 1 || cols < 1)
      throw IndexError("matrix algebra needs positive dimensions");
  }
  static MatrixCtx square(int nn, QConv c = QConv::standard) {
    return MatrixCtx(nn, nn, c);
  }

  int count() const { return m * n; }
  GenId id(int i, int j) const {
    if (i < 1 || i > m || j < 1 || j > n)
      throw IndexError("x[" + std::to_string(i) + "," + std::to_string(j) +
                       "] outside " + std::to_string(m) + "x" +
                       std::to_string(n));
    return static_cast<GenId>((i - 1) * n + (j - 1));
  }
  std::pair<int, int> ij(GenId g) const {
    return {static_cast<int>(g) / n + 1, static_cast<int>(g) % n + 1};
  }
  std::string label(GenId g) const {
    auto [i, j] = ij(g);
    return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  LabelFn labeler() const {
    return [*this](GenId g) { return label(g); };
  }
  LocScalar qval(long e = 1) const { return q_of(conv, e); }
};

using Poly = NCPoly<LocScalar>;
using Pres = Presentation<LocScalar>;

// Defining relations, oriented so that the row-major larger word rewrites
// to smaller ones.  For generators A = x[a,b] > B = x[c,d]:
//   same row or same column        A*B -> q^-1 B*A
//   a > c, b < d                   A*B -> B*A
//   a > c, b > d                   A*B -> B*A - (q - q^-1) x[c,b]*x[a,d]
inline Pres manin_presentation(const MatrixCtx& ctx) {
  Pres pres(ctx.count());
  const LocScalar q = ctx.qval(1), qi = ctx.qval(-1);
  const LocScalar qdiff = q - qi;
  for (int a = 1; a <= ctx.m; ++a)
    for (int b = 1; b <= ctx.n; ++b)
      for (int c = 1; c <= ctx.m; ++c)
        for (int d = 1; d <= ctx.n; ++d) {
          GenId A = ctx.id(a, b), B = ctx.id(c, d);
          if (A <= B) continue;
          Poly rep;
          if (a == c || b == d) {
            rep.add_term({B, A}, qi);
          } else if (b < d) {  // a > c here
            rep.add_term({B, A}, LocScalar::one());
          } else {  // a > c, b > d
            rep.add_term({B, A}, LocScalar::one());
            rep.add_term({ctx.id(c, b), ctx.id(a, d)}, -qdiff);
          }
          pres.add_rule(A, B, std::move(rep));
        }
  return pres;
}

namespace detail {
inline bool is_diag(const MatrixCtx& ctx, GenId g) {
  auto [i, j] = ctx.ij(g);
  return i == j;
}
}  // namespace detail

// Substitute x[i,j] = delta_ij + (q-1) chi[i,j]: rewrites a polynomial in
// the x generators as one in the chi generators (same ids).  Off-diagonal
// letters contribute (q-1) chi, diagonal letters 1 + (q-1) chi.
inline Poly x_to_chi(const Poly& p, const MatrixCtx& ctx) {
  const LocScalar eps(Laurent::qm1());
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    // Expand the product over subsets of diagonal positions.
    Poly acc = Poly::scalar(c);
    for (GenId g : w) {
      Poly factor = Poly::generator(g, eps);
      if (detail::is_diag(ctx, g)) factor.add_term({}, LocScalar::one());
      acc *= factor;
    }
    out += acc;
  }
  return out;
}

// Inverse substitution chi[i,j] = (q-1)^-1 (x[i,j] - delta_ij).
inline Poly chi_to_x(const Poly& p, const MatrixCtx& ctx) {
  const LocScalar epsinv = LocScalar::qm1_inverse(1);
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Poly acc = Poly::scalar(c);
    for (GenId g : w) {
      Poly factor = Poly::generator(g, epsinv);
      if (detail::is_diag(ctx, g)) factor.add_term({}, -epsinv);
      acc *= factor;
    }
    out += acc;
  }
  return out;
}

inline std::string chi_label(const MatrixCtx& ctx, GenId g) {
  auto [i, j] = ctx.ij(g);
  return "chi[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

// Relations among the chi generators, derived from the Manin relations by
// the coordinate change.  For each descending pair the normal form of
// chi_A chi_B is computed through x coordinates; the result is quadratic
// with (q-1)-controlled lower-degree tail.
inline Pres chi_presentation(const MatrixCtx& ctx, const Pres& manin) {
  Pres pres(ctx.count());
  for (GenId a = 0; a < ctx.count(); ++a)
    for (GenId b = 0; b < ctx.count(); ++b) {
      if (a <= b) continue;
      Poly chiword = Poly::word({a, b}, LocScalar::one());
      Poly rep = x_to_chi(manin.normal_form(chi_to_x(chiword, ctx)), ctx);
      pres.add_rule(a, b, std::move(rep));
    }
  return pres;
}

}  // namespace qalg
