#include "peaklab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace peaklab {

Polynomial::Polynomial(const Rat& constant) {
  if (!peaklab::is_zero(constant)) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rat& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.rbegin()->first;
}

const Rat& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (peaklab::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (peaklab::is_zero(it->second)) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      out.add_term(ma.multiplied_by(mb), ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out;
  if (peaklab::is_zero(c)) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  // Print leading term first.
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (sgn(c) < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    if (c != 1 || it->first.is_one()) {
      out << rat_to_string(c);
      if (!it->first.is_one()) out << "*";
    }
    if (!it->first.is_one()) out << it->first.to_string();
  }
  return out.str();
}

Polynomial Polynomial::parse(const std::string& text) {
  // Accepts the to_string() shape: terms joined by " + " / " - ", each term
  // "[coeff*]monomial" or a bare rational.
  Polynomial out;
  std::string s = text;
  if (s.empty()) return out;
  size_t pos = 0;
  int sign = 1;
  if (s[0] == '-') {
    sign = -1;
    pos = 1;
  }
  while (pos < s.size()) {
    size_t next_plus = s.find(" + ", pos);
    size_t next_minus = s.find(" - ", pos);
    size_t end = std::min(next_plus, next_minus);
    std::string term = s.substr(pos, end == std::string::npos ? end : end - pos);
    Rat coeff(sign);
    Monomial m;
    auto star = term.find('*');
    bool has_digit_head = !term.empty() && (isdigit(term[0]) || term[0] == '-');
    if (star != std::string::npos && has_digit_head) {
      coeff *= rat_from_string(term.substr(0, star));
      m = Monomial::parse(term.substr(star + 1));
    } else if (has_digit_head && term != "1") {
      coeff *= rat_from_string(term);
    } else if (term != "1") {
      m = Monomial::parse(term);
    }
    out.add_term(m, coeff);
    if (end == std::string::npos) break;
    sign = (end == next_plus) ? 1 : -1;
    pos = end + 3;
  }
  return out;
}

}  // namespace peaklab
