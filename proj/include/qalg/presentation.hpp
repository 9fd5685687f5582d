#pragma once

#include <optional>
#include <vector>

#include "qalg/error.hpp"
#include "qalg/ncpoly.hpp"

namespace qalg {

// Quadratic rewriting system over an ordered generator set: each rule
// rewrites a two-letter word to a polynomial in strictly smaller words.
// Rewriting therefore terminates; once check_confluence reports no failures
// the normal forms are unique and the sorted words form a PBW-type basis of
// the quotient algebra.
//
// The engine does not complete non-confluent systems.
template <class S>
class Presentation {
 public:
  explicit Presentation(int num_gens)
      : num_gens_(num_gens),
        rules_(static_cast<size_t>(num_gens) * num_gens) {}

  int num_generators() const { return num_gens_; }

  void add_rule(GenId a, GenId b, NCPoly<S> replacement) {
    Word lead{a, b};
    for (const auto& [w, c] : replacement.terms())
      if (!word_less(w, lead))
        throw Error("rule replacement not smaller than its leading word");
    rules_[index(a, b)] = std::move(replacement);
  }

  const std::optional<NCPoly<S>>& rule(GenId a, GenId b) const {
    return rules_[index(a, b)];
  }

  size_t rule_count() const {
    size_t n = 0;
    for (const auto& r : rules_)
      if (r) ++n;
    return n;
  }

  // Fixed point of rewriting.  Reduction processes the largest pending word
  // first so coefficients of equal words merge before being expanded again.
  NCPoly<S> normal_form(const NCPoly<S>& p, size_t step_budget = 0) const {
    if (step_budget == 0)
      step_budget = 2000000 + 50000 * static_cast<size_t>(p.size());
    typename NCPoly<S>::Terms pending(p.terms().begin(), p.terms().end());
    NCPoly<S> out;
    size_t steps = 0;
    while (!pending.empty()) {
      auto it = std::prev(pending.end());
      Word w = it->first;
      S c = it->second;
      pending.erase(it);
      if (c.is_zero()) continue;
      size_t pos = first_reducible(w);
      if (pos == npos) {
        out.add_term(std::move(w), c);
        continue;
      }
      if (++steps > step_budget)
        throw StepBudgetExceeded("normal_form exceeded step budget");
      const NCPoly<S>& rep = *rules_[index(w[pos], w[pos + 1])];
      for (const auto& [rw, rc] : rep.terms()) {
        Word nw;
        nw.reserve(w.size() - 2 + rw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + pos);
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        S nc = c * rc;
        if (nc.is_zero()) continue;
        auto [slot, inserted] = pending.emplace(std::move(nw), nc);
        if (!inserted) {
          slot->second += nc;
          if (slot->second.is_zero()) pending.erase(slot);
        }
      }
    }
    return out;
  }

  NCPoly<S> nf_product(const NCPoly<S>& a, const NCPoly<S>& b) const {
    return normal_form(a * b);
  }

  NCPoly<S> commutator(const NCPoly<S>& a, const NCPoly<S>& b) const {
    return normal_form(a * b - b * a);
  }

  struct ConfluenceFailure {
    Word overlap;
    NCPoly<S> left_nf;
    NCPoly<S> right_nf;
  };
  struct ConfluenceReport {
    size_t overlaps_checked = 0;
    std::vector<ConfluenceFailure> failures;
    bool ok() const { return failures.empty(); }
  };

  // Resolves every length-3 overlap both ways and compares normal forms.
  ConfluenceReport check_confluence() const {
    ConfluenceReport rep;
    for (GenId a = 0; a < num_gens_; ++a)
      for (GenId b = 0; b < num_gens_; ++b) {
        if (!rules_[index(a, b)]) continue;
        for (GenId c = 0; c < num_gens_; ++c) {
          if (!rules_[index(b, c)]) continue;
          ++rep.overlaps_checked;
          NCPoly<S> left = normal_form(append_letter(*rules_[index(a, b)], c));
          NCPoly<S> right =
              normal_form(prepend_letter(a, *rules_[index(b, c)]));
          if (left != right)
            rep.failures.push_back({Word{a, b, c}, left, right});
        }
      }
    return rep;
  }

  static NCPoly<S> append_letter(const NCPoly<S>& p, GenId g) {
    NCPoly<S> r;
    for (const auto& [w, c] : p.terms()) {
      Word nw = w;
      nw.push_back(g);
      r.add_term(std::move(nw), c);
    }
    return r;
  }
  static NCPoly<S> prepend_letter(GenId g, const NCPoly<S>& p) {
    NCPoly<S> r;
    for (const auto& [w, c] : p.terms()) {
      Word nw{g};
      nw.insert(nw.end(), w.begin(), w.end());
      r.add_term(std::move(nw), c);
    }
    return r;
  }

  // Coefficient-wise transport of the whole system into another ring.
  template <class T, class F>
  Presentation<T> map_coeffs(F&& f) const {
    Presentation<T> out(num_gens_);
    for (GenId a = 0; a < num_gens_; ++a)
      for (GenId b = 0; b < num_gens_; ++b)
        if (rules_[index(a, b)])
          out.add_rule(a, b,
                       rules_[index(a, b)]->template map_coeffs<T>(f));
    return out;
  }

 private:
  static constexpr size_t npos = static_cast<size_t>(-1);

  size_t index(GenId a, GenId b) const {
    return static_cast<size_t>(a) * num_gens_ + b;
  }

  size_t first_reducible(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (rules_[index(w[i], w[i + 1])]) return i;
    return npos;
  }

  int num_gens_;
  std::vector<std::optional<NCPoly<S>>> rules_;
};

}  // namespace qalg
