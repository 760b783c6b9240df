#pragma once

#include <map>
#include <string>

#include "peaklab/monomial.hpp"
#include "peaklab/rational.hpp"

namespace peaklab {

// Sparse polynomial with exact rational coefficients; terms are kept in the
// fixed monomial order, so leading terms and serializations are canonical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rat& constant);
  static Polynomial from_monomial(const Monomial& m, const Rat& c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat, MonomialLess>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  Rat coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const;  // throws on zero
  const Rat& leading_coefficient() const;

  void add_term(const Monomial& m, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  std::string to_string() const;  // "u1*w12 - 2*u1*u2" style
  static Polynomial parse(const std::string& text);

 private:
  std::map<Monomial, Rat, MonomialLess> terms_;
};

}  // namespace peaklab
