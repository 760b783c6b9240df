#pragma once

#include <map>
#include <string>

#include "peaklab/group_algebra.hpp"
#include "peaklab/partition.hpp"
#include "peaklab/rational.hpp"

namespace peaklab {

// Symmetric function in the power-sum basis: sparse map lambda -> coefficient
// of p_lambda.  May be graded (support in several degrees).
class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(const Rat& constant);
  static SymFunc p(const Partition& lambda, const Rat& c = Rat(1));
  static SymFunc p(int k);   // p_k
  static SymFunc h(int m);   // complete homogeneous in p-basis
  static SymFunc e(int m);   // elementary in p-basis

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Partition, Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rat& c);

  bool homogeneous_of_degree(int n) const;
  // Degree of a homogeneous symmetric function; throws if mixed.
  int degree() const;

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;  // p_lambda p_mu = p_{lambda u mu}
  SymFunc scaled(const Rat& c) const;
  bool operator==(const SymFunc& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;       // "1/2*p[1,1] - 1/2*p[2]"
  std::string to_json_string() const;  // {"p":{"1,1":"1/2","2":"-1/2"}}
  static SymFunc from_json_string(const std::string& text);

 private:
  std::map<Partition, Rat> coeffs_;
};

// p_m[f]: substitute p_k -> p_{km} throughout.
SymFunc plethysm_p(int m, const SymFunc& f);

// h_m[f] for homogeneous f of positive degree, via the Newton-style
// recurrence m h_m[f] = sum_k p_k[f] h_{m-k}[f].
SymFunc h_of(int m, const SymFunc& f);

// Frobenius characteristic of the free-Lie-algebra multilinear component:
// (1/l) sum_{d | l} mu(d) p_d^{l/d}.
SymFunc lie_ell(int ell);

// Higher Lie character: product over part sizes i of h_{m_i}[lie_ell(i)].
SymFunc L_lambda(const Partition& lambda);

// Frobenius characteristic of a class function: sum chi(lambda)/z_lambda p_lambda.
SymFunc frobenius(const ClassFunction& chi);
// Inverse: chi(lambda) = z_lambda * [p_lambda] f for homogeneous degree-n f.
ClassFunction character_of(const SymFunc& f, int n);
// n! * [p_{1^n}] f, the dimension of the underlying representation.
Rat sf_dimension(const SymFunc& f, int n);

// Irreducible character chi^mu on the class of cycle type lambda
// (Murnaghan-Nakayama with memoization).
Int mn_character(const Partition& mu, const Partition& lambda);

// Schur expansion of a homogeneous f: coefficient of s_mu is
// sum_lambda [p_lambda] f * chi^mu(lambda).
std::map<Partition, Rat> to_schur(const SymFunc& f);
std::string schur_json_string(const std::map<Partition, Rat>& expansion);

// Restriction / induction on characteristics: d/dp_1 and multiplication by p_1.
SymFunc restrict_sf(const SymFunc& f);
SymFunc induct_sf(const SymFunc& f);

int moebius(int n);

}  // namespace peaklab
