#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "peaklab/symfunc.hpp"

namespace peaklab {

// Polynomial in the formal parameters t, q with SymFunc coefficients.
class ParamSeries {
 public:
  ParamSeries() = default;
  static ParamSeries term(int t_exp, int q_exp, const SymFunc& f);

  const std::map<std::pair<int, int>, SymFunc>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  SymFunc coefficient(int t_exp, int q_exp) const;
  void add_term(int t_exp, int q_exp, const SymFunc& f);

  ParamSeries operator+(const ParamSeries& o) const;
  ParamSeries operator-(const ParamSeries& o) const;
  ParamSeries shifted(int dt, int dq) const;   // multiply by t^dt q^dq
  ParamSeries apply(SymFunc (*fn)(const SymFunc&)) const;
  bool operator==(const ParamSeries& o) const { return terms_ == o.terms_; }

  std::string to_string() const;
  std::string to_json_string() const;  // {"t-exp":{"q-exp": symfunc}}

 private:
  std::map<std::pair<int, int>, SymFunc> terms_;
};

// Bivariate polynomial with rational coefficients, keyed by exponent pairs.
using BivarPoly = std::map<std::pair<int, int>, Rat>;

std::string bivar_to_string(const BivarPoly& p, const char* x = "t",
                            const char* y = "q");

// Equivariant bigraded series: sum over lambda |- n of
// L_lambda t^{(n-odd(lambda))/2} q^{n-l(lambda)}.
ParamSeries equivariant_series(int n);

// Dimension specialization of equivariant_series.
BivarPoly bihilb_from_equivariant(int n);
// Independent route: sum over sigma in S_n of t^{(n-odd(sigma))/2} q^{n-cyc}.
BivarPoly bihilb_by_enumeration(int n);
// b_n = b_{n-1} + t q (n-1) (1 + q (n-2)) b_{n-2}, b_0 = b_1 = 1.
BivarPoly bihilb_by_recursion(int n);
// q = 1 column; satisfies the (n-1)^2 three-term recurrence.
std::vector<Int> sheffer_column(int n);

// Coefficients of x^0..x^order of the closed-form generating function in the
// substitution t = s^2, keyed by (s, q) exponents:
//   exp( a * sum_{odd m} z^m/m + b * sum_{even m} z^m/m )
// at a = s^{-1} q^{-1}, b = q^{-1}, z = s q x.
std::vector<BivarPoly> bihilb_gf_coefficients(int order);
// The same coefficient of x^n from bihilb_n: substitute t = s^2 and divide
// by n!.
BivarPoly bihilb_gf_term_from_series(int n);

// Exact check of the branching identity
//   d(IH_n)/dp1 = IH_{n-1} + t q p1 (1 + q p1 d/dp1) IH_{n-2};
// returns the difference (zero iff the identity holds).
ParamSeries branching_defect(int n);

// Sum of L_lambda over partitions of n with exactly m even parts; zero
// outside 0 <= m <= n/2.
SymFunc jordan_P(int n, int m);

}  // namespace peaklab
