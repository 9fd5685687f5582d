#pragma once

#include <map>

#include "qalg/presentation.hpp"

namespace qalg {

// Element of the tensor square of a presented algebra; both legs are kept in
// normal form with respect to the same presentation.
template <class S>
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (word_less(a.first, b.first)) return true;
      if (word_less(b.first, a.first)) return false;
      return word_less(a.second, b.second);
    }
  };
  using Terms = std::map<Key, S, KeyLess>;

  TensorPoly() = default;

  static TensorPoly of(const NCPoly<S>& a, const NCPoly<S>& b) {
    TensorPoly t;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(Word a, Word b, const S& c) {
    if (c.is_zero()) return;
    Key k{std::move(a), std::move(b)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) {
    return a += b;
  }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) {
    return a -= b;
  }
  friend TensorPoly operator-(const TensorPoly& a) {
    TensorPoly r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  TensorPoly scaled(const S& c) const {
    TensorPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, cc] : terms_) r.add_term(k.first, k.second, cc * c);
    return r;
  }

  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) {
    return !(a == b);
  }

  // (a (x) b)(c (x) d) = ac (x) bd, legs reduced afterwards.
  TensorPoly multiplied(const TensorPoly& o, const Presentation<S>& pres) const {
    TensorPoly r;
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        Word l = ka.first;
        l.insert(l.end(), kb.first.begin(), kb.first.end());
        Word rr = ka.second;
        rr.insert(rr.end(), kb.second.begin(), kb.second.end());
        r.add_term(std::move(l), std::move(rr), ca * cb);
      }
    return r.leg_normal_form(pres);
  }

  TensorPoly leg_normal_form(const Presentation<S>& pres) const {
    TensorPoly out;
    for (const auto& [k, c] : terms_) {
      NCPoly<S> left =
          pres.normal_form(NCPoly<S>::word(k.first, c));
      for (const auto& [wl, cl] : left.terms()) {
        NCPoly<S> right = pres.normal_form(NCPoly<S>::word(k.second, cl));
        for (const auto& [wr, cr] : right.terms()) out.add_term(wl, wr, cr);
      }
    }
    return out;
  }

  template <class T, class F>
  TensorPoly<T> map_coeffs(F&& f) const {
    TensorPoly<T> r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, f(c));
    return r;
  }

  std::string str(const LabelFn& label) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) s += " + ";
      s += "(" + c.str() + ")*" + word_str(k.first, label) + " (x) " +
           word_str(k.second, label);
      first = false;
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace qalg
