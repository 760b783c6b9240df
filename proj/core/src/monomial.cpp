#include "peaklab/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace peaklab {

std::string RingSpec::name() const {
  switch (kind) {
    case RingSpecKind::AT: return "a-t";
    case RingSpecKind::BU: return "b-u";
    case RingSpecKind::BVW: return "b-vw";
    case RingSpecKind::BVW_GR: return "b-vw-gr";
  }
  return "?";
}

RingSpec RingSpec::parse(const std::string& name, int n) {
  if (name == "a-t") return {RingSpecKind::AT, n};
  if (name == "b-u") return {RingSpecKind::BU, n};
  if (name == "b-vw") return {RingSpecKind::BVW, n};
  if (name == "b-vw-gr") return {RingSpecKind::BVW_GR, n};
  throw std::invalid_argument("unknown ring spec: " + name);
}

namespace {

Variable make_pair_var(VarKind kind, int i, int j) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("need 1 <= i < j");
  return Variable{kind, i, j};
}

}  // namespace

Variable Variable::t(int i, int j) { return make_pair_var(VarKind::T, i, j); }
Variable Variable::u(int i) {
  if (i < 1) throw std::invalid_argument("u index must be >= 1");
  return Variable{VarKind::U, i, i};
}
Variable Variable::uplus(int i, int j) {
  return make_pair_var(VarKind::UPlus, i, j);
}
Variable Variable::uminus(int i, int j) {
  return make_pair_var(VarKind::UMinus, i, j);
}
Variable Variable::v(int i, int j) { return make_pair_var(VarKind::V, i, j); }
Variable Variable::w(int i, int j) { return make_pair_var(VarKind::W, i, j); }

int Variable::rank_in_level() const {
  switch (kind) {
    case VarKind::T: return i;
    case VarKind::U: return 0;
    case VarKind::UPlus:
    case VarKind::V: return 2 * i - 1;
    case VarKind::UMinus:
    case VarKind::W: return 2 * i;
  }
  return 0;
}

std::strong_ordering Variable::operator<=>(const Variable& o) const {
  if (auto c = level() <=> o.level(); c != 0) return c;
  if (auto c = rank_in_level() <=> o.rank_in_level(); c != 0) return c;
  return static_cast<uint8_t>(kind) <=> static_cast<uint8_t>(o.kind);
}

std::string Variable::to_string() const {
  const char* head = "";
  switch (kind) {
    case VarKind::T: head = "t"; break;
    case VarKind::U: head = "u"; break;
    case VarKind::UPlus: head = "u+"; break;
    case VarKind::UMinus: head = "u-"; break;
    case VarKind::V: head = "v"; break;
    case VarKind::W: head = "w"; break;
  }
  if (kind == VarKind::U) return head + std::to_string(i);
  if (j >= 10)
    return head + std::to_string(i) + "," + std::to_string(j);
  return head + std::to_string(i) + std::to_string(j);
}

Variable Variable::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty variable");
  size_t pos = 1;
  VarKind kind;
  switch (text[0]) {
    case 't': kind = VarKind::T; break;
    case 'v': kind = VarKind::V; break;
    case 'w': kind = VarKind::W; break;
    case 'u':
      kind = VarKind::U;
      if (pos < text.size() && text[pos] == '+') {
        kind = VarKind::UPlus;
        ++pos;
      } else if (pos < text.size() && text[pos] == '-') {
        kind = VarKind::UMinus;
        ++pos;
      }
      break;
    default: throw std::invalid_argument("bad variable: " + text);
  }
  std::string digits = text.substr(pos);
  if (digits.empty()) throw std::invalid_argument("bad variable: " + text);
  if (kind == VarKind::U && digits.find(',') == std::string::npos)
    return Variable::u(std::stoi(digits));
  int i, j;
  auto comma = digits.find(',');
  if (comma != std::string::npos) {
    i = std::stoi(digits.substr(0, comma));
    j = std::stoi(digits.substr(comma + 1));
  } else if (digits.size() == 2) {
    i = digits[0] - '0';
    j = digits[1] - '0';
  } else {
    throw std::invalid_argument("ambiguous variable indices (use ','): " +
                                text);
  }
  switch (kind) {
    case VarKind::T: return Variable::t(i, j);
    case VarKind::V: return Variable::v(i, j);
    case VarKind::W: return Variable::w(i, j);
    case VarKind::UPlus: return Variable::uplus(i, j);
    case VarKind::UMinus: return Variable::uminus(i, j);
    default: throw std::invalid_argument("bad variable: " + text);
  }
}

Monomial::Monomial(std::vector<std::pair<Variable, int>> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Variable, int>> merged;
  for (const auto& [v, e] : factors_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  factors_ = std::move(merged);
}

Monomial Monomial::var(Variable v, int exp) { return Monomial({{v, exp}}); }

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::edge_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_)
    if (v.is_pair()) d += e;
  return d;
}

int Monomial::exponent(const Variable& v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

bool Monomial::divides(const Monomial& m) const {
  for (const auto& [v, e] : factors_)
    if (m.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::multiplied_by(const Monomial& o) const {
  auto f = factors_;
  f.insert(f.end(), o.factors_.begin(), o.factors_.end());
  return Monomial(std::move(f));
}

Monomial Monomial::divided_by(const Monomial& o) const {
  if (!o.divides(*this)) throw std::invalid_argument("not divisible");
  std::vector<std::pair<Variable, int>> f;
  for (const auto& [v, e] : factors_) {
    int r = e - o.exponent(v);
    if (r > 0) f.emplace_back(v, r);
  }
  return Monomial(std::move(f));
}

bool Monomial::squarefree() const {
  for (const auto& [v, e] : factors_)
    if (e > 1) return false;
  return true;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (size_t k = 0; k < factors_.size(); ++k) {
    if (k) out << '*';
    out << factors_[k].first.to_string();
    if (factors_[k].second > 1) out << '^' << factors_[k].second;
  }
  return out.str();
}

Monomial Monomial::parse(const std::string& text) {
  if (text == "1" || text.empty()) return Monomial();
  std::vector<std::pair<Variable, int>> f;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '*')) {
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      exp = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    f.emplace_back(Variable::parse(tok), exp);
  }
  return Monomial(std::move(f));
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Reverse-lex tie-break: at the smallest variable where the exponents
  // differ, the larger exponent loses.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  size_t ia = 0, ib = 0;
  while (ia < fa.size() || ib < fb.size()) {
    if (ia < fa.size() && ib < fb.size()) {
      if (fa[ia].first == fb[ib].first) {
        if (fa[ia].second != fb[ib].second)
          return fa[ia].second > fb[ib].second;
        ++ia, ++ib;
      } else if (fa[ia].first < fb[ib].first) {
        return true;  // a has a positive exponent where b has zero
      } else {
        return false;
      }
    } else {
      // One side exhausted with equal prefixes; impossible for equal total
      // degree unless the monomials are equal.
      return false;
    }
  }
  return false;  // equal
}

}  // namespace peaklab
