#pragma once

#include <map>

#include "qalg/word.hpp"

namespace qalg {

// Noncommutative polynomial: finitely many words with nonzero coefficients
// in a commutative coefficient ring S.  Multiplication is free (word
// concatenation); reduction modulo relations lives in Presentation.
template <class S>
class NCPoly {
 public:
  using Terms = std::map<Word, S, WordLess>;

  NCPoly() = default;
  explicit NCPoly(const S& c) { add_term({}, c); }

  static NCPoly scalar(const S& c) { return NCPoly(c); }
  static NCPoly generator(GenId g, const S& c) {
    NCPoly p;
    p.add_term({g}, c);
    return p;
  }
  static NCPoly word(Word w, const S& c) {
    NCPoly p;
    p.add_term(std::move(w), c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  int degree() const {
    return terms_.empty() ? -1
                          : static_cast<int>(terms_.rbegin()->first.size());
  }

  S coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S() : it->second;
  }

  void add_term(Word w, const S& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a) {
    NCPoly r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
  }

  NCPoly scaled(const S& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, cc] : terms_) r.add_term(w, cc * c);
    return r;
  }

  // Free product (no reduction).
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(std::move(w), ca * cb);
      }
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) {
    return !(a == b);
  }

  // Coefficient-wise map into another scalar ring; zero images are dropped.
  template <class T, class F>
  NCPoly<T> map_coeffs(F&& f) const {
    NCPoly<T> r;
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }

  std::string str(const LabelFn& label) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) s += " + ";
      std::string cs = it->second.str();
      if (it->first.empty()) {
        s += cs;
      } else {
        if (cs == "1") {
          s += word_str(it->first, label);
        } else {
          bool simple = cs.find_first_of("+-") == std::string::npos ||
                        (cs[0] == '-' &&
                         cs.find_first_of("+-", 1) == std::string::npos);
          s += (simple ? cs : "(" + cs + ")") + "*" +
               word_str(it->first, label);
        }
      }
      first = false;
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace qalg
