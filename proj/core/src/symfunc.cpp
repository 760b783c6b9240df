#include "peaklab/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace peaklab {

SymFunc::SymFunc(const Rat& constant) {
  if (!peaklab::is_zero(constant)) coeffs_.emplace(Partition(), constant);
}

SymFunc SymFunc::p(const Partition& lambda, const Rat& c) {
  SymFunc f;
  f.add_term(lambda, c);
  return f;
}

SymFunc SymFunc::p(int k) { return p(Partition({k})); }

SymFunc SymFunc::h(int m) {
  // h_m = sum_{lambda |- m} p_lambda / z_lambda.
  if (m < 0) return SymFunc();
  SymFunc f;
  for (const auto& lambda : partitions_of(m))
    f.add_term(lambda, Rat(1) / Rat(lambda.centralizer_order()));
  return f;
}

SymFunc SymFunc::e(int m) {
  // e_m = sum_{lambda |- m} (-1)^{m - l(lambda)} p_lambda / z_lambda.
  if (m < 0) return SymFunc();
  SymFunc f;
  for (const auto& lambda : partitions_of(m)) {
    Rat c = Rat(1) / Rat(lambda.centralizer_order());
    if ((m - lambda.length()) % 2) c = -c;
    f.add_term(lambda, c);
  }
  return f;
}

Rat SymFunc::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rat& c) {
  if (peaklab::is_zero(c)) return;
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    coeffs_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (peaklab::is_zero(it->second)) coeffs_.erase(it);
}

bool SymFunc::homogeneous_of_degree(int n) const {
  for (const auto& [lambda, c] : coeffs_)
    if (lambda.weight() != n) return false;
  return true;
}

int SymFunc::degree() const {
  if (coeffs_.empty()) return 0;
  int d = coeffs_.begin()->first.weight();
  if (!homogeneous_of_degree(d))
    throw std::logic_error("degree of a non-homogeneous symmetric function");
  return d;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc out = *this;
  for (const auto& [l, c] : o.coeffs_) out.add_term(l, c);
  return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc out = *this;
  for (const auto& [l, c] : o.coeffs_) out.add_term(l, -c);
  return out;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  SymFunc out;
  for (const auto& [la, ca] : coeffs_)
    for (const auto& [lb, cb] : o.coeffs_)
      out.add_term(la.merged_with(lb), ca * cb);
  return out;
}

SymFunc SymFunc::scaled(const Rat& c) const {
  SymFunc out;
  if (peaklab::is_zero(c)) return out;
  for (const auto& [l, v] : coeffs_) out.coeffs_.emplace(l, v * c);
  return out;
}

std::string SymFunc::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [l, c] : coeffs_) {
    Rat v = c;
    if (first) {
      if (sgn(v) < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (sgn(v) < 0 ? " - " : " + ");
      if (sgn(v) < 0) v = -v;
    }
    first = false;
    if (v != 1 || l.empty()) out << rat_to_string(v);
    if (!l.empty()) {
      if (v != 1) out << "*";
      out << "p[" << l.to_string() << "]";
    }
  }
  return out.str();
}

std::string SymFunc::to_json_string() const {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [l, c] : coeffs_)
    coeffs[l.to_string()] = rat_to_string(c);
  nlohmann::ordered_json j;
  j["p"] = std::move(coeffs);
  return j.dump();
}

SymFunc SymFunc::from_json_string(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SymFunc f;
  for (const auto& [key, value] : j.at("p").items())
    f.add_term(Partition::parse(key),
               rat_from_string(value.get<std::string>()));
  return f;
}

SymFunc plethysm_p(int m, const SymFunc& f) {
  if (m < 1) throw std::invalid_argument("plethysm_p needs m >= 1");
  SymFunc out;
  for (const auto& [lambda, c] : f.coefficients()) {
    std::vector<int> parts;
    for (int part : lambda.parts()) parts.push_back(part * m);
    out.add_term(Partition(std::move(parts)), c);
  }
  return out;
}

SymFunc h_of(int m, const SymFunc& f) {
  if (m < 0) return SymFunc();
  if (m == 0) return SymFunc(Rat(1));
  if (!is_zero(f.coefficient(Partition())))
    throw std::invalid_argument("h_of needs a plethysm base without a "
                                "degree-0 term");
  std::vector<SymFunc> h(m + 1);
  h[0] = SymFunc(Rat(1));
  std::vector<SymFunc> pk(m + 1);
  for (int k = 1; k <= m; ++k) pk[k] = plethysm_p(k, f);
  for (int d = 1; d <= m; ++d) {
    SymFunc acc;
    for (int k = 1; k <= d; ++k) acc = acc + pk[k] * h[d - k];
    h[d] = acc.scaled(Rat(1, d));
  }
  return h[m];
}

SymFunc lie_ell(int ell) {
  if (ell < 1) throw std::invalid_argument("lie_ell needs ell >= 1");
  SymFunc f;
  for (int d = 1; d <= ell; ++d) {
    if (ell % d) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    std::vector<int> parts(ell / d, d);
    f.add_term(Partition(std::move(parts)), Rat(mu, ell));
  }
  return f;
}

SymFunc L_lambda(const Partition& lambda) {
  if (lambda.empty()) return SymFunc(Rat(1));
  SymFunc out(Rat(1));
  int i = 0;
  const auto& parts = lambda.parts();
  while (i < static_cast<int>(parts.size())) {
    int j = i;
    while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
    out = out * h_of(j - i, lie_ell(parts[i]));
    i = j;
  }
  return out;
}

SymFunc frobenius(const ClassFunction& chi) {
  SymFunc f;
  auto parts = partitions_of(chi.n());
  for (size_t i = 0; i < parts.size(); ++i)
    f.add_term(parts[i],
               chi.values()[i] / Rat(parts[i].centralizer_order()));
  return f;
}

ClassFunction character_of(const SymFunc& f, int n) {
  if (!f.homogeneous_of_degree(n))
    throw std::invalid_argument("character_of needs degree-n input");
  auto parts = partitions_of(n);
  std::vector<Rat> values;
  for (const auto& lambda : parts)
    values.push_back(f.coefficient(lambda) * Rat(lambda.centralizer_order()));
  return ClassFunction(n, std::move(values));
}

Rat sf_dimension(const SymFunc& f, int n) {
  std::vector<int> ones(n, 1);
  return f.coefficient(Partition(std::move(ones))) * Rat(factorial(n));
}

namespace {

// Beta-number form of the Murnaghan-Nakayama recursion: a border strip of
// size k removable from mu corresponds to b_i -> b_i - k keeping the beta
// numbers distinct and nonnegative; the height is the number of beta numbers
// strictly between the old and new values.
Int mn_impl(const Partition& mu, const Partition& lambda,
            std::map<std::pair<Partition, Partition>, Int>& cache);

Int mn_strip_sum(const Partition& mu, const Partition& lambda,
                 std::map<std::pair<Partition, Partition>, Int>& cache) {
  const int k = lambda.parts().front();
  Partition rest(std::vector<int>(lambda.parts().begin() + 1,
                                  lambda.parts().end()));
  const int len = mu.length();
  std::vector<int> betas(len);
  for (int i = 0; i < len; ++i) betas[i] = mu.parts()[i] + (len - 1 - i);
  Int total = 0;
  for (int i = 0; i < len; ++i) {
    int target = betas[i] - k;
    if (target < 0) continue;
    bool clash = false;
    int height = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (betas[j] == target) clash = true;
      if (betas[j] > target && betas[j] < betas[i]) ++height;
    }
    if (clash) continue;
    std::vector<int> nb = betas;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      int part = nb[j] - (len - 1 - j);
      if (part > 0) parts.push_back(part);
    }
    Int sub = mn_impl(Partition(std::move(parts)), rest, cache);
    total += (height % 2) ? -sub : sub;
  }
  return total;
}

Int mn_impl(const Partition& mu, const Partition& lambda,
            std::map<std::pair<Partition, Partition>, Int>& cache) {
  if (mu.empty()) return 1;
  auto key = std::make_pair(mu, lambda);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Int value = mn_strip_sum(mu, lambda, cache);
  cache.emplace(std::move(key), value);
  return value;
}

}  // namespace

Int mn_character(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw std::invalid_argument("mn_character needs |mu| = |lambda|");
  static std::mutex mu_lock;
  static std::map<std::pair<Partition, Partition>, Int> cache;
  std::lock_guard<std::mutex> lock(mu_lock);
  return mn_impl(mu, lambda, cache);
}

std::map<Partition, Rat> to_schur(const SymFunc& f) {
  std::map<Partition, Rat> out;
  if (f.is_zero()) return out;
  int n = f.degree();
  for (const auto& mu : partitions_of(n)) {
    Rat coeff(0);
    for (const auto& [lambda, c] : f.coefficients())
      coeff += c * Rat(mn_character(mu, lambda));
    if (!is_zero(coeff)) out.emplace(mu, coeff);
  }
  return out;
}

std::string schur_json_string(const std::map<Partition, Rat>& expansion) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [mu, c] : expansion)
    coeffs[mu.to_string()] = rat_to_string(c);
  nlohmann::ordered_json j;
  j["s"] = std::move(coeffs);
  return j.dump();
}

SymFunc restrict_sf(const SymFunc& f) {
  SymFunc out;
  for (const auto& [lambda, c] : f.coefficients()) {
    int m1 = lambda.multiplicity(1);
    if (m1 == 0) continue;
    std::vector<int> parts = lambda.parts();
    parts.pop_back();  // parts are weakly decreasing, a trailing 1 exists
    out.add_term(Partition(std::move(parts)), c * m1);
  }
  return out;
}

SymFunc induct_sf(const SymFunc& f) { return SymFunc::p(1) * f; }

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace peaklab
