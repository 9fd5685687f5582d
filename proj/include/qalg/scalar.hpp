#pragma once

#include <climits>
#include <optional>

#include "qalg/laurent.hpp"

namespace qalg {

// Element of Q[q,q^-1] with only (q-1) inverted: num / (q-1)^dpow.
// Canonical form: num not divisible by (q-1) unless dpow == 0.
// General rational functions in q are deliberately not representable.
class LocScalar {
 public:
  LocScalar() = default;
  LocScalar(const Laurent& num, int dpow = 0) : num_(num), dpow_(dpow) {
    canonicalize();
  }
  explicit LocScalar(const Rat& c) : num_(c) {}
  explicit LocScalar(long c) : num_(Rat(c)) {}

  static LocScalar one() { return LocScalar(1); }
  static LocScalar q(long e = 1) { return LocScalar(Laurent::q(e)); }
  // 1/(q-1)^k
  static LocScalar qm1_inverse(int k) {
    return LocScalar(Laurent::one(), k);
  }

  const Laurent& num() const { return num_; }
  int denom_power() const { return dpow_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return dpow_ == 0 && num_ == Laurent::one(); }

  // (q-1)-adic valuation; INT_MAX for zero.
  int val() const {
    if (num_.is_zero()) return INT_MAX;
    if (dpow_ > 0) return -dpow_;  // canonical: num not divisible
    return num_.val_qm1();
  }

  friend LocScalar operator+(const LocScalar& a, const LocScalar& b) {
    int d = std::max(a.dpow_, b.dpow_);
    Laurent n = a.num_ * Laurent::qm1().pow(static_cast<unsigned>(d - a.dpow_)) +
                b.num_ * Laurent::qm1().pow(static_cast<unsigned>(d - b.dpow_));
    return LocScalar(n, d);
  }
  friend LocScalar operator-(const LocScalar& a, const LocScalar& b) {
    return a + (-b);
  }
  friend LocScalar operator-(const LocScalar& a) {
    LocScalar r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend LocScalar operator*(const LocScalar& a, const LocScalar& b) {
    return LocScalar(a.num_ * b.num_, a.dpow_ + b.dpow_);
  }
  LocScalar& operator+=(const LocScalar& o) { return *this = *this + o; }
  LocScalar& operator-=(const LocScalar& o) { return *this = *this - o; }
  LocScalar& operator*=(const LocScalar& o) { return *this = *this * o; }

  friend bool operator==(const LocScalar& a, const LocScalar& b) {
    return a.dpow_ == b.dpow_ && a.num_ == b.num_;
  }
  friend bool operator!=(const LocScalar& a, const LocScalar& b) {
    return !(a == b);
  }

  // Multiply by (q-1)^k, k possibly negative; negative k must divide exactly
  // or the denominator power grows.
  LocScalar shift_qm1(int k) const {
    if (is_zero()) return LocScalar();
    if (k >= 0)
      return LocScalar(num_ * Laurent::qm1().pow(static_cast<unsigned>(k)),
                       dpow_);
    return LocScalar(num_, dpow_ - k);
  }

  // Value at q = 1; requires val >= 0.
  Rat eval_at_one() const {
    if (is_zero()) return Rat(0);
    if (dpow_ > 0)
      throw NegativeValuation("eval_at_one: negative (q-1)-valuation " +
                              str());
    return num_.eval_at_one();
  }

  // Inverse when the element is a unit c*q^e*(q-1)^k of the localization.
  std::optional<LocScalar> try_invert() const {
    return try_div(one(), *this);
  }

  // Exact quotient a/b inside the localization, when it exists there.
  static std::optional<LocScalar> try_div(const LocScalar& a,
                                          const LocScalar& b) {
    if (b.is_zero()) throw Error("LocScalar division by zero");
    if (a.is_zero()) return LocScalar();
    // Strip (q-1) content from b's numerator so it can move into the
    // denominator power: a/b = (an / bn') * (q-1)^(bd - ad - v).
    Laurent bn = b.num_;
    int v = bn.val_qm1();
    for (int i = 0; i < v; ++i) bn = *bn.try_div_qm1();
    auto quo = a.num_.try_div(bn);
    if (!quo) return std::nullopt;
    return LocScalar(*quo, a.dpow_ - b.dpow_ + v);
  }

  std::string str() const {
    if (dpow_ == 0) return num_.str();
    return "(" + num_.str() + ")/(q-1)^" + std::to_string(dpow_);
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      dpow_ = 0;
      return;
    }
    while (dpow_ > 0) {
      auto d = num_.try_div_qm1();
      if (!d) break;
      num_ = *d;
      --dpow_;
    }
    if (dpow_ < 0) {
      num_ *= Laurent::qm1().pow(static_cast<unsigned>(-dpow_));
      dpow_ = 0;
    }
  }

  Laurent num_;
  int dpow_ = 0;
};

}  // namespace qalg
