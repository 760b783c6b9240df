#pragma once

#include <gmpxx.h>

#include <string>

namespace peaklab {

// Exact arbitrary-precision rational coefficients. No floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Canonicalized num/den constructor.  The raw two-argument mpq_class
// constructor skips canonicalization, which breaks equality tests.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Serialized as "p" or "p/q" in lowest terms, e.g. "-1/6".
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

Int factorial(int n);
Int binomial_int(int n, int k);

}  // namespace peaklab
