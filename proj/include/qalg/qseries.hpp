#pragma once

#include <vector>

#include "qalg/scalar.hpp"

namespace qalg {

// Truncated (q-1)-adic expansion: sum c_k (q-1)^k for k < N, exact mod
// (q-1)^N.  All elements in one computation share the same order N.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int order) : c_(static_cast<size_t>(order), Rat(0)) {}
  QSeries(int order, const Rat& c0) : QSeries(order) {
    if (order > 0) c_[0] = c0;
  }

  static QSeries one(int order) { return QSeries(order, Rat(1)); }
  // (q-1)^k mod (q-1)^N
  static QSeries eps(int order, int k = 1) {
    QSeries r(order);
    if (k < order) r.c_[static_cast<size_t>(k)] = 1;
    return r;
  }

  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  Rat& coeff(int k) { return c_[static_cast<size_t>(k)]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!qalg::is_zero(x)) return false;
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t k = 1; k < c_.size(); ++k)
      if (!qalg::is_zero(c_[k])) return false;
    return true;
  }

  // Valuation; order() when zero.
  int val() const {
    for (size_t k = 0; k < c_.size(); ++k)
      if (!qalg::is_zero(c_[k])) return static_cast<int>(k);
    return order();
  }

  QSeries truncated(int new_order) const {
    QSeries r(new_order);
    for (int k = 0; k < std::min(new_order, order()); ++k) r.c_[k] = c_[k];
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend QSeries operator-(const QSeries& a) {
    QSeries r(a.order());
    for (int k = 0; k < r.order(); ++k) r.c_[k] = -a.c_[k];
    return r;
  }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < r.order(); ++i) {
      if (qalg::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j < r.order(); ++j)
        if (!qalg::is_zero(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) {
    return !(a == b);
  }

  // Quotient by (q-1)^k; lower coefficients must vanish.
  QSeries div_eps(int k) const {
    for (int j = 0; j < std::min(k, order()); ++j)
      if (!qalg::is_zero(c_[j]))
        throw NotDivisible("div_eps: valuation below " + std::to_string(k));
    // The top k coefficients of the quotient are unknown; the result lives
    // at reduced order.
    QSeries r(order() - k);
    for (int j = 0; j < r.order(); ++j) r.c_[j] = c_[j + k];
    return r;
  }

  // Inverse for units (c_0 != 0).
  QSeries invert() const {
    if (c_.empty() || qalg::is_zero(c_[0]))
      throw NotUnit("QSeries::invert: constant term is zero");
    QSeries r(order());
    r.c_[0] = Rat(1) / c_[0];
    for (int k = 1; k < order(); ++k) {
      Rat s(0);
      for (int j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
      r.c_[k] = -s / c_[0];
    }
    return r;
  }

  std::string str() const {
    std::string s;
    bool first = true;
    for (int k = 0; k < order(); ++k) {
      if (qalg::is_zero(c_[k])) continue;
      if (!first) s += " + ";
      s += c_[k].get_str();
      if (k >= 1)
        s += "*(q-1)" + (k > 1 ? "^" + std::to_string(k) : std::string());
      first = false;
    }
    if (first) s = "0";
    return s + " + O((q-1)^" + std::to_string(order()) + ")";
  }

 private:
  std::vector<Rat> c_;
};

// (q-1)-adic expansion of a localized scalar mod (q-1)^N; requires val >= 0.
inline QSeries expand_qseries(const LocScalar& s, int order) {
  if (s.is_zero()) return QSeries(order);
  if (s.val() < 0)
    throw NegativeValuation("expand_qseries: " + s.str());
  int work = order + s.denom_power();
  // q^e = (1+(q-1))^e; for e < 0 expand the geometric series for q^{-1}.
  QSeries qinv(work);
  for (int k = 0; k < work; ++k) qinv.coeff(k) = (k % 2 == 0) ? 1 : -1;
  QSeries acc(work);
  for (const auto& [e, c] : s.num().terms()) {
    QSeries t(work, c);
    if (e >= 0) {
      QSeries qe(work);
      for (int k = 0; k < work; ++k)
        qe.coeff(k) = binomial(static_cast<unsigned long>(e),
                               static_cast<unsigned long>(k));
      t *= qe;
    } else {
      QSeries p = QSeries::one(work);
      for (long i = 0; i < -e; ++i) p *= qinv;
      t *= p;
    }
    acc += t;
  }
  return acc.div_eps(s.denom_power());
}

}  // namespace qalg
