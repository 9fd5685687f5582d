#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qalg {

// Generators are identified by their position in a fixed total order; the id
// IS the sort key.  Alphabets (which id means which symbol) are owned by the
// modules that build presentations.
using GenId = uint16_t;

// Element of the free monoid.
using Word = std::vector<GenId>;

// Graded order: degree first, then lexicographic by generator id.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return word_less(a, b);
  }
};

inline bool is_sorted_word(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) return false;
  return true;
}

using LabelFn = std::function<std::string(GenId)>;

inline std::string word_str(const Word& w, const LabelFn& label) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += label(w[i]);
  }
  return s;
}

}  // namespace qalg
