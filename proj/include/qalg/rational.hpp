#pragma once

#include <gmpxx.h>

#include <string>

namespace qalg {

// Exact rational coefficients. All arithmetic in the library is exact;
// there is no floating-point fallback anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline Rat binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

}  // namespace qalg
