#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qalg/error.hpp"
#include "qalg/rational.hpp"

namespace qalg {

// Sparse Laurent polynomial in q with rational coefficients.
// Invariant: no stored zero coefficients.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rat& c) {
    if (!qalg::is_zero(c)) terms_[0] = c;
  }
  explicit Laurent(long c) : Laurent(Rat(c)) {}

  // c * q^e
  static Laurent monomial(Rat c, long e) {
    Laurent r;
    if (!qalg::is_zero(c)) r.terms_[e] = std::move(c);
    return r;
  }
  static Laurent q(long e = 1) { return monomial(Rat(1), e); }
  static Laurent one() { return Laurent(Rat(1)); }
  // q - 1
  static Laurent qm1() {
    Laurent r;
    r.terms_[1] = 1;
    r.terms_[0] = -1;
    return r;
  }

  const std::map<long, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  long min_exp() const { return terms_.begin()->first; }
  long max_exp() const { return terms_.rbegin()->first; }

  Rat coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(long e, const Rat& c) {
    if (qalg::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (qalg::is_zero(it->second)) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }

  Laurent pow(unsigned long k) const {
    Laurent r = one(), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // Value at q = 1 (sum of coefficients).
  Rat eval_at_one() const {
    Rat s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // q -> q^{-1}
  Laurent substitute_q_inverse() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  // Exact quotient by (q-1), or nullopt when (q-1) does not divide.
  std::optional<Laurent> try_div_qm1() const {
    if (is_zero()) return Laurent();
    if (!qalg::is_zero(eval_at_one())) return std::nullopt;
    // Shift to an ordinary polynomial, synthetic-divide by (q-1), shift back.
    long lo = min_exp(), hi = max_exp();
    std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (const auto& [e, v] : terms_) c[static_cast<size_t>(e - lo)] = v;
    Laurent quot;
    Rat carry(0);
    for (long e = hi; e > lo; --e) {
      carry += c[static_cast<size_t>(e - lo)];
      quot.add_term(e - 1, carry);
    }
    return quot;
  }

  // (q-1)-adic valuation; is_zero() must be checked by the caller.
  int val_qm1() const {
    if (is_zero()) throw Error("valuation of zero");
    Laurent cur = *this;
    int v = 0;
    for (;;) {
      auto d = cur.try_div_qm1();
      if (!d) return v;
      cur = *d;
      ++v;
    }
  }

  // Monomial c*q^e detection (units of the Laurent ring).
  std::optional<std::pair<Rat, long>> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    auto it = terms_.begin();
    return std::make_pair(it->second, it->first);
  }

  // Exact polynomial quotient, or nullopt when division is not exact.
  std::optional<Laurent> try_div(const Laurent& den) const {
    if (den.is_zero()) throw Error("division by zero Laurent");
    if (is_zero()) return Laurent();
    long sa = min_exp(), sb = den.min_exp();
    // Work with plain polynomials f, g (constant terms nonzero after shift).
    std::vector<Rat> f(static_cast<size_t>(max_exp() - sa + 1), Rat(0));
    std::vector<Rat> g(static_cast<size_t>(den.max_exp() - sb + 1), Rat(0));
    for (const auto& [e, v] : terms_) f[static_cast<size_t>(e - sa)] = v;
    for (const auto& [e, v] : den.terms_) g[static_cast<size_t>(e - sb)] = v;
    if (f.size() < g.size()) return std::nullopt;
    std::vector<Rat> quo(f.size() - g.size() + 1, Rat(0));
    for (size_t k = quo.size(); k-- > 0;) {
      Rat c = f[k + g.size() - 1] / g.back();
      quo[k] = c;
      if (!qalg::is_zero(c))
        for (size_t j = 0; j < g.size(); ++j) f[k + j] -= c * g[j];
    }
    for (const auto& r : f)
      if (!qalg::is_zero(r)) return std::nullopt;
    Laurent out;
    for (size_t k = 0; k < quo.size(); ++k)
      out.add_term(static_cast<long>(k) + sa - sb, quo[k]);
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest power first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rat c = it->second;
      long e = it->first;
      bool neg = sgn(c) < 0;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      Rat a = abs(c);
      if (e == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<long, Rat> terms_;
};

}  // namespace qalg
