#include "peaklab/param_series.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace peaklab {

ParamSeries ParamSeries::term(int t_exp, int q_exp, const SymFunc& f) {
  ParamSeries s;
  s.add_term(t_exp, q_exp, f);
  return s;
}

SymFunc ParamSeries::coefficient(int t_exp, int q_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? SymFunc() : it->second;
}

void ParamSeries::add_term(int t_exp, int q_exp, const SymFunc& f) {
  if (f.is_zero()) return;
  auto key = std::make_pair(t_exp, q_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) terms_.erase(it);
}

ParamSeries ParamSeries::operator+(const ParamSeries& o) const {
  ParamSeries out = *this;
  for (const auto& [k, f] : o.terms_) out.add_term(k.first, k.second, f);
  return out;
}

ParamSeries ParamSeries::operator-(const ParamSeries& o) const {
  ParamSeries out = *this;
  for (const auto& [k, f] : o.terms_)
    out.add_term(k.first, k.second, f.scaled(Rat(-1)));
  return out;
}

ParamSeries ParamSeries::shifted(int dt, int dq) const {
  ParamSeries out;
  for (const auto& [k, f] : terms_)
    out.terms_.emplace(std::make_pair(k.first + dt, k.second + dq), f);
  return out;
}

ParamSeries ParamSeries::apply(SymFunc (*fn)(const SymFunc&)) const {
  ParamSeries out;
  for (const auto& [k, f] : terms_) out.add_term(k.first, k.second, fn(f));
  return out;
}

std::string ParamSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, f] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "t^" << k.first << " q^" << k.second << " (" << f.to_string()
        << ")";
  }
  return out.str();
}

std::string ParamSeries::to_json_string() const {
  nlohmann::ordered_json by_t = nlohmann::ordered_json::object();
  for (const auto& [k, f] : terms_) {
    auto& slot = by_t[std::to_string(k.first)];
    if (slot.is_null()) slot = nlohmann::ordered_json::object();
    slot[std::to_string(k.second)] =
        nlohmann::ordered_json::parse(f.to_json_string());
  }
  return by_t.dump();
}

std::string bivar_to_string(const BivarPoly& p, const char* x,
                            const char* y) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p) {
    if (is_zero(c)) continue;
    if (!first) out << " + ";
    first = false;
    out << rat_to_string(c);
    if (k.first) out << "*" << x << "^" << k.first;
    if (k.second) out << "*" << y << "^" << k.second;
  }
  return first ? "0" : out.str();
}

ParamSeries equivariant_series(int n) {
  if (n < 0) throw std::invalid_argument("equivariant_series needs n >= 0");
  ParamSeries s;
  for (const auto& lambda : partitions_of(n)) {
    int odd = lambda.odd_count();
    s.add_term((n - odd) / 2, n - lambda.length(), L_lambda(lambda));
  }
  return s;
}

BivarPoly bihilb_from_equivariant(int n) {
  BivarPoly out;
  ParamSeries series = equivariant_series(n);
  for (const auto& [k, f] : series.terms()) {
    Rat dim = sf_dimension(f, n);
    if (!is_zero(dim)) out[k] += dim;
  }
  return out;
}

BivarPoly bihilb_by_enumeration(int n) {
  BivarPoly out;
  for (const auto& sigma : all_permutations(n)) {
    Partition type = sigma.cycle_type();
    out[{(n - type.odd_count()) / 2, n - type.length()}] += 1;
  }
  return out;
}

BivarPoly bihilb_by_recursion(int n) {
  std::vector<BivarPoly> b(std::max(n + 1, 2));
  b[0] = {{{0, 0}, Rat(1)}};
  b[1] = {{{0, 0}, Rat(1)}};
  for (int m = 2; m <= n; ++m) {
    BivarPoly next = b[m - 1];
    for (const auto& [k, c] : b[m - 2]) {
      // t q (m-1) b_{m-2} and t q^2 (m-1)(m-2) b_{m-2}
      next[{k.first + 1, k.second + 1}] += c * Rat(m - 1);
      next[{k.first + 1, k.second + 2}] += c * Rat((m - 1) * (m - 2));
    }
    for (auto it = next.begin(); it != next.end();)
      it = is_zero(it->second) ? next.erase(it) : std::next(it);
    b[m] = std::move(next);
  }
  return b[n];
}

std::vector<Int> sheffer_column(int n) {
  BivarPoly b = bihilb_from_equivariant(n);
  std::map<int, Rat> by_t;
  for (const auto& [k, c] : b) by_t[k.first] += c;
  std::vector<Int> out;
  for (int d = 0; by_t.count(d); ++d) {
    if (!is_integer(by_t[d]))
      throw std::logic_error("non-integral Poincare coefficient");
    out.push_back(Int(by_t[d].get_num()));
  }
  return out;
}

namespace {

// Trivariate series in x with BivarPoly (s,q) coefficients, truncated.
using XSeries = std::vector<BivarPoly>;

XSeries x_multiply(const XSeries& a, const XSeries& b, int order) {
  XSeries out(order + 1);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j)
      for (const auto& [ka, ca] : a[i])
        for (const auto& [kb, cb] : b[j])
          out[i + j][{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  return out;
}

}  // namespace

std::vector<BivarPoly> bihilb_gf_coefficients(int order) {
  // log F = a A(z) + b B(z) with A the odd and B the even partial sums of
  // -log(1-z) and z = s q x, a = s^{-1} q^{-1}, b = q^{-1}.  Each z^m a or
  // z^m b contributes nonnegative s and q exponents after substitution.
  XSeries log_f(order + 1);
  for (int m = 1; m <= order; ++m) {
    // z^m a_m: odd m -> s^{m-1} q^{m-1}, even m -> s^m q^{m-1}.
    int s_exp = (m % 2) ? m - 1 : m;
    log_f[m][{s_exp, m - 1}] += Rat(1, m);
  }
  XSeries f(order + 1);
  f[0][{0, 0}] = Rat(1);
  XSeries power(order + 1);
  power[0][{0, 0}] = Rat(1);
  Rat inv_factorial(1);
  for (int k = 1; k <= order; ++k) {
    power = x_multiply(power, log_f, order);
    inv_factorial /= Rat(k);
    for (int d = 0; d <= order; ++d)
      for (const auto& [key, c] : power[d]) f[d][key] += c * inv_factorial;
  }
  for (auto& coeff : f)
    for (auto it = coeff.begin(); it != coeff.end();)
      it = is_zero(it->second) ? coeff.erase(it) : std::next(it);
  return f;
}

BivarPoly bihilb_gf_term_from_series(int n) {
  BivarPoly out;
  Rat inv_fact = Rat(1) / Rat(factorial(n));
  for (const auto& [k, c] : bihilb_from_equivariant(n))
    out[{2 * k.first, k.second}] += c * inv_fact;
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

ParamSeries branching_defect(int n) {
  if (n < 2) throw std::invalid_argument("branching needs n >= 2");
  ParamSeries ihn = equivariant_series(n);
  ParamSeries ihn1 = equivariant_series(n - 1);
  ParamSeries ihn2 = equivariant_series(n - 2);
  ParamSeries lhs = ihn.apply(restrict_sf);
  ParamSeries rhs = ihn1 + ihn2.apply(induct_sf).shifted(1, 1) +
                    ihn2.apply(restrict_sf)
                        .apply(induct_sf)
                        .apply(induct_sf)
                        .shifted(1, 2);
  return lhs - rhs;
}

SymFunc jordan_P(int n, int m) {
  if (m < 0 || 2 * m > n) return SymFunc();
  SymFunc out;
  for (const auto& lambda : partitions_of(n))
    if (lambda.even_count() == m) out = out + L_lambda(lambda);
  return out;
}

}  // namespace peaklab
