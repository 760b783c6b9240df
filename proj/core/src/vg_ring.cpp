#include "peaklab/vg_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace peaklab {

namespace {

bool kind_in_spec(VarKind kind, RingSpecKind spec) {
  switch (spec) {
    case RingSpecKind::AT:
      return kind == VarKind::T;
    case RingSpecKind::BU:
      return kind == VarKind::U || kind == VarKind::UPlus ||
             kind == VarKind::UMinus;
    case RingSpecKind::BVW:
    case RingSpecKind::BVW_GR:
      return kind == VarKind::U || kind == VarKind::V || kind == VarKind::W;
  }
  return false;
}

void check_alphabet(const Polynomial& p, RingSpec spec) {
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors())
      if (!variable_in_spec(v, spec))
        throw std::invalid_argument("variable " + v.to_string() +
                                    " does not belong to ring " + spec.name());
}

Monomial mono(std::initializer_list<Variable> vars) {
  std::vector<std::pair<Variable, int>> f;
  for (const auto& v : vars) f.emplace_back(v, 1);
  return Monomial(std::move(f));
}

Polynomial combine(std::initializer_list<std::pair<Monomial, int>> terms) {
  Polynomial p;
  for (const auto& [m, c] : terms) p.add_term(m, Rat(c));
  return p;
}

struct RingContext {
  RingSpec spec;
  std::vector<Relation> rels;
  // Monic copies keyed by initial monomial, split into square initials
  // (indexed by the variable) and squarefree quadratic initials (indexed by
  // the unordered variable pair).
  std::map<Variable, Polynomial> square_reducers;
  std::map<std::pair<Variable, Variable>, Polynomial> pair_reducers;

  mutable std::mutex cache_mu;
  mutable std::map<Monomial, Polynomial, MonomialLess> nf_cache;
};

std::vector<Relation> build_relations(RingSpec spec) {
  const int n = spec.n;
  std::vector<Relation> out;
  auto push = [&out](Polynomial p, Monomial init) {
    out.push_back(Relation{std::move(p), std::move(init)});
  };

  switch (spec.kind) {
    case RingSpecKind::AT: {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          Monomial sq = Monomial::var(Variable::t(i, j), 2);
          push(Polynomial::from_monomial(sq), sq);
        }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            auto tij = Variable::t(i, j), tjk = Variable::t(j, k),
                 tik = Variable::t(i, k);
            push(combine({{mono({tij, tjk}), 1},
                          {mono({tik, tij}), -1},
                          {mono({tik, tjk}), -1}}),
                 mono({tik, tjk}));
          }
      break;
    }
    case RingSpecKind::BU: {
      for (int i = 1; i <= n; ++i) {
        Monomial sq = Monomial::var(Variable::u(i), 2);
        push(Polynomial::from_monomial(sq), sq);
      }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto up = Variable::uplus(i, j), um = Variable::uminus(i, j);
          auto ui = Variable::u(i), uj = Variable::u(j);
          for (auto var : {up, um}) {
            Monomial sq = Monomial::var(var, 2);
            push(Polynomial::from_monomial(sq), sq);
          }
          push(combine({{mono({ui, up}), 1},
                        {mono({ui, um}), -1},
                        {mono({up, um}), -1}}),
               mono({up, um}));
          push(combine({{mono({ui, up}), 1},
                        {mono({ui, uj}), -1},
                        {mono({up, uj}), -1}}),
               mono({up, uj}));
          push(combine({{mono({ui, uj}), 1},
                        {mono({ui, um}), -1},
                        {mono({uj, um}), -1}}),
               mono({uj, um}));
        }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            auto pij = Variable::uplus(i, j), pik = Variable::uplus(i, k),
                 pjk = Variable::uplus(j, k);
            auto mij = Variable::uminus(i, j), mik = Variable::uminus(i, k),
                 mjk = Variable::uminus(j, k);
            push(combine({{mono({pij, pjk}), 1},
                          {mono({pij, pik}), -1},
                          {mono({pik, pjk}), -1}}),
                 mono({pik, pjk}));
            push(combine({{mono({mij, pjk}), 1},
                          {mono({mij, mik}), -1},
                          {mono({mik, pjk}), -1}}),
                 mono({mik, pjk}));
            push(combine({{mono({mij, mjk}), -1},
                          {mono({mij, pik}), 1},
                          {mono({pik, mjk}), -1}}),
                 mono({pik, mjk}));
            push(combine({{mono({pij, mjk}), -1},
                          {mono({pij, mik}), 1},
                          {mono({mik, mjk}), -1}}),
                 mono({mik, mjk}));
          }
      break;
    }
    case RingSpecKind::BVW:
    case RingSpecKind::BVW_GR: {
      const bool graded = spec.kind == RingSpecKind::BVW_GR;
      for (int i = 1; i <= n; ++i) {
        Monomial sq = Monomial::var(Variable::u(i), 2);
        push(Polynomial::from_monomial(sq), sq);
      }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto ui = Variable::u(i), uj = Variable::u(j);
          auto vij = Variable::v(i, j), wij = Variable::w(i, j);
          push(combine({{mono({vij, wij}), 1}}), mono({vij, wij}));
          push(combine({{mono({ui, wij}), 1}, {mono({uj, vij}), -1}}),
               mono({uj, vij}));
          if (graded) {
            Monomial v2 = Monomial::var(vij, 2), w2 = Monomial::var(wij, 2);
            push(Polynomial::from_monomial(v2), v2);
            push(Polynomial::from_monomial(w2), w2);
            push(combine({{mono({ui, vij}), 1}, {mono({uj, wij}), -1}}),
                 mono({uj, wij}));
          } else {
            Monomial v2 = Monomial::var(vij, 2), w2 = Monomial::var(wij, 2);
            push(combine({{mono({ui, wij}), -2}, {v2, 1}}), v2);
            push(combine({{mono({ui, wij}), 2}, {w2, 1}}), w2);
            push(combine({{mono({ui, vij}), 1},
                          {mono({ui, uj}), -2},
                          {mono({uj, wij}), -1}}),
                 mono({uj, wij}));
          }
        }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            auto vij = Variable::v(i, j), vik = Variable::v(i, k),
                 vjk = Variable::v(j, k);
            auto wij = Variable::w(i, j), wik = Variable::w(i, k),
                 wjk = Variable::w(j, k);
            push(combine({{mono({vij, wjk}), 1},
                          {mono({wij, wik}), -1},
                          {mono({vik, vjk}), -1}}),
                 mono({vik, vjk}));
            push(combine({{mono({wij, wjk}), 1},
                          {mono({vij, wik}), -1},
                          {mono({wik, wjk}), -1}}),
                 mono({wik, wjk}));
            push(combine({{mono({vij, vjk}), 1},
                          {mono({vij, vik}), -1},
                          {mono({vik, wjk}), -1}}),
                 mono({vik, wjk}));
            push(combine({{mono({wij, vjk}), 1},
                          {mono({wij, vik}), -1},
                          {mono({wik, vjk}), -1}}),
                 mono({wik, vjk}));
          }
      break;
    }
  }
  return out;
}

const RingContext& ring_context(RingSpec spec) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<RingContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(spec.kind), spec.n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<RingContext>();
  ctx->spec = spec;
  ctx->rels = build_relations(spec);
  for (const auto& rel : ctx->rels) {
    if (!(rel.poly.leading_monomial() == rel.initial))
      throw std::logic_error(
          "monomial order does not reproduce the tabulated initial term of " +
          rel.poly.to_string());
    Polynomial monic = rel.poly.scaled(Rat(1) / rel.poly.leading_coefficient());
    const auto& factors = rel.initial.factors();
    if (factors.size() == 1 && factors[0].second == 2) {
      ctx->square_reducers.emplace(factors[0].first, std::move(monic));
    } else if (factors.size() == 2 && rel.initial.squarefree()) {
      auto a = factors[0].first, b = factors[1].first;
      ctx->pair_reducers.emplace(std::make_pair(std::min(a, b), std::max(a, b)),
                                 std::move(monic));
    } else {
      throw std::logic_error("unexpected initial term shape");
    }
  }
  auto& ref = *ctx;
  cache.emplace(key, std::move(ctx));
  return ref;
}

// One division step: the monic reducer whose initial term divides m, or
// nullptr when m is reduced.
const Polynomial* find_reducer(const RingContext& ctx, const Monomial& m,
                               Monomial* quotient) {
  for (const auto& [v, e] : m.factors()) {
    if (e >= 2) {
      auto it = ctx.square_reducers.find(v);
      if (it != ctx.square_reducers.end()) {
        *quotient = m.divided_by(Monomial::var(v, 2));
        return &it->second;
      }
    }
  }
  const auto& f = m.factors();
  for (size_t a = 0; a < f.size(); ++a)
    for (size_t b = a + 1; b < f.size(); ++b) {
      auto it = ctx.pair_reducers.find({f[a].first, f[b].first});
      if (it != ctx.pair_reducers.end()) {
        *quotient = m.divided_by(mono({f[a].first, f[b].first}));
        return &it->second;
      }
    }
  return nullptr;
}

constexpr size_t kNfCacheCap = 400000;

Polynomial normal_form_monomial(const RingContext& ctx, const Monomial& m) {
  {
    std::lock_guard<std::mutex> lock(ctx.cache_mu);
    auto it = ctx.nf_cache.find(m);
    if (it != ctx.nf_cache.end()) return it->second;
  }
  Monomial quotient;
  const Polynomial* reducer = find_reducer(ctx, m, &quotient);
  Polynomial result;
  if (reducer == nullptr) {
    result = Polynomial::from_monomial(m);
  } else {
    // m = quotient * initial; replace via the monic relation and recurse on
    // the strictly smaller monomials.
    for (const auto& [ms, cs] : reducer->terms()) {
      if (ms == reducer->leading_monomial()) continue;
      Polynomial sub =
          normal_form_monomial(ctx, quotient.multiplied_by(ms));
      for (const auto& [mr, cr] : sub.terms()) result.add_term(mr, -cs * cr);
    }
  }
  {
    std::lock_guard<std::mutex> lock(ctx.cache_mu);
    if (ctx.nf_cache.size() < kNfCacheCap) ctx.nf_cache.emplace(m, result);
  }
  return result;
}

}  // namespace

std::vector<std::vector<Variable>> level_sets(RingSpec spec) {
  std::vector<std::vector<Variable>> levels;
  const int n = spec.n;
  switch (spec.kind) {
    case RingSpecKind::AT:
      for (int j = 2; j <= n; ++j) {
        std::vector<Variable> level;
        for (int i = 1; i < j; ++i) level.push_back(Variable::t(i, j));
        levels.push_back(std::move(level));
      }
      break;
    case RingSpecKind::BU:
      for (int j = 1; j <= n; ++j) {
        std::vector<Variable> level{Variable::u(j)};
        for (int i = 1; i < j; ++i) {
          level.push_back(Variable::uplus(i, j));
          level.push_back(Variable::uminus(i, j));
        }
        levels.push_back(std::move(level));
      }
      break;
    case RingSpecKind::BVW:
    case RingSpecKind::BVW_GR:
      for (int j = 1; j <= n; ++j) {
        std::vector<Variable> level{Variable::u(j)};
        for (int i = 1; i < j; ++i) {
          level.push_back(Variable::v(i, j));
          level.push_back(Variable::w(i, j));
        }
        levels.push_back(std::move(level));
      }
      break;
  }
  return levels;
}

std::vector<Variable> alphabet(RingSpec spec) {
  std::vector<Variable> vars;
  for (auto& level : level_sets(spec))
    vars.insert(vars.end(), level.begin(), level.end());
  return vars;
}

bool variable_in_spec(const Variable& v, RingSpec spec) {
  if (!kind_in_spec(v.kind, spec.kind)) return false;
  return v.j <= spec.n && v.i >= 1;
}

const std::vector<Relation>& relations(RingSpec spec) {
  return ring_context(spec).rels;
}

Polynomial normal_form(const Polynomial& p, RingSpec spec) {
  check_alphabet(p, spec);
  const RingContext& ctx = ring_context(spec);
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial nf = normal_form_monomial(ctx, m);
    for (const auto& [mr, cr] : nf.terms()) out.add_term(mr, c * cr);
  }
  return out;
}

Polynomial normal_form(const Monomial& m, RingSpec spec) {
  return normal_form(Polynomial::from_monomial(m), spec);
}

std::vector<Monomial> standard_basis(RingSpec spec) {
  auto levels = level_sets(spec);
  std::vector<Monomial> out;
  std::vector<std::pair<Variable, int>> current;
  std::function<void(size_t)> rec = [&](size_t li) {
    if (li == levels.size()) {
      out.push_back(Monomial(current));
      return;
    }
    rec(li + 1);
    for (const auto& v : levels[li]) {
      current.emplace_back(v, 1);
      rec(li + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Int> hilbert_series(RingSpec spec) {
  std::vector<Int> coeffs{Int(1)};
  for (const auto& level : level_sets(spec)) {
    std::vector<Int> next(coeffs.size() + 1, Int(0));
    for (size_t d = 0; d < coeffs.size(); ++d) {
      next[d] += coeffs[d];
      next[d + 1] += coeffs[d] * Int(static_cast<long>(level.size()));
    }
    coeffs = std::move(next);
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::map<std::pair<int, int>, Int> bigraded_hilbert_series(RingSpec spec) {
  std::map<std::pair<int, int>, Int> census{{{0, 0}, Int(1)}};
  for (const auto& level : level_sets(spec)) {
    std::map<std::pair<int, int>, Int> next = census;
    for (const auto& v : level) {
      int dq = v.is_pair() ? 1 : 0;
      for (const auto& [key, count] : census)
        next[{key.first + 1, key.second + dq}] += count;
    }
    census = std::move(next);
  }
  return census;
}

namespace {

Polynomial substitute(const Polynomial& p,
                      const std::function<Polynomial(const Variable&)>& image) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(Rat(1));
    for (const auto& [v, e] : m.factors()) {
      Polynomial base = image(v);
      for (int k = 0; k < e; ++k) term = term * base;
    }
    out = out + term.scaled(c);
  }
  return out;
}

}  // namespace

Polynomial change_basis_vw_to_upm(const Polynomial& p) {
  return substitute(p, [](const Variable& v) -> Polynomial {
    switch (v.kind) {
      case VarKind::U:
        return Polynomial::from_monomial(Monomial::var(v));
      case VarKind::V: {
        Polynomial out;
        out.add_term(Monomial::var(Variable::uplus(v.i, v.j)), Rat(1));
        out.add_term(Monomial::var(Variable::uminus(v.i, v.j)), Rat(1));
        return out;
      }
      case VarKind::W: {
        Polynomial out;
        out.add_term(Monomial::var(Variable::uplus(v.i, v.j)), Rat(1));
        out.add_term(Monomial::var(Variable::uminus(v.i, v.j)), Rat(-1));
        return out;
      }
      default:
        throw std::invalid_argument("change of basis expects the vw alphabet");
    }
  });
}

Polynomial change_basis_upm_to_vw(const Polynomial& p) {
  return substitute(p, [](const Variable& v) -> Polynomial {
    switch (v.kind) {
      case VarKind::U:
        return Polynomial::from_monomial(Monomial::var(v));
      case VarKind::UPlus: {
        Polynomial out;
        out.add_term(Monomial::var(Variable::v(v.i, v.j)), Rat(1, 2));
        out.add_term(Monomial::var(Variable::w(v.i, v.j)), Rat(1, 2));
        return out;
      }
      case VarKind::UMinus: {
        Polynomial out;
        out.add_term(Monomial::var(Variable::v(v.i, v.j)), Rat(1, 2));
        out.add_term(Monomial::var(Variable::w(v.i, v.j)), Rat(-1, 2));
        return out;
      }
      default:
        throw std::invalid_argument("change of basis expects the u+- alphabet");
    }
  });
}

namespace {

// Image of one variable under a signed permutation, through the defining
// linear forms t_ij, u+_ij <-> x_j - x_i; u-_ij <-> x_j + x_i; u_i <-> x_i;
// v_ij <-> x_j; w_ij <-> -x_i (scalar factors drop out).
std::pair<int, Variable> act_on_variable(const SignedPermutation& g,
                                         const Variable& var) {
  auto img = [&g](int idx) {
    int s = g(idx);
    return std::make_pair(s < 0 ? -1 : 1, std::abs(s));
  };
  switch (var.kind) {
    case VarKind::U: {
      auto [sign, a] = img(var.i);
      return {sign, Variable::u(a)};
    }
    case VarKind::T: {
      auto [si, a] = img(var.i);
      auto [sj, b] = img(var.j);
      if (si < 0 || sj < 0)
        throw std::invalid_argument("type-A variables admit only S_n actions");
      return b > a ? std::make_pair(1, Variable::t(a, b))
                   : std::make_pair(-1, Variable::t(b, a));
    }
    case VarKind::UPlus:
    case VarKind::UMinus: {
      auto [si, a] = img(var.i);
      auto [sj, b] = img(var.j);
      // image form: cb * x_b + ca * x_a
      int ca = var.kind == VarKind::UPlus ? -si : si;
      int cb = sj;
      int p = std::min(a, b), q = std::max(a, b);
      int cq = (b == q) ? cb : ca;
      int cp = (b == q) ? ca : cb;
      if (cp == -cq) return {cq, Variable::uplus(p, q)};
      return {cq, Variable::uminus(p, q)};
    }
    case VarKind::V: {
      auto [si, a] = img(var.i);
      auto [sj, b] = img(var.j);
      (void)si;
      if (b > a) return {sj, Variable::v(a, b)};
      return {-sj, Variable::w(b, a)};
    }
    case VarKind::W: {
      auto [si, a] = img(var.i);
      auto [sj, b] = img(var.j);
      (void)sj;
      if (a < b) return {si, Variable::w(a, b)};
      return {-si, Variable::v(b, a)};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Polynomial act(const SignedPermutation& g, const Polynomial& p,
               RingSpec spec) {
  check_alphabet(p, spec);
  if (g.size() != spec.n)
    throw std::invalid_argument("acting element has the wrong rank");
  if (spec.kind == RingSpecKind::AT) {
    for (int v : g.window())
      if (v < 0)
        throw std::invalid_argument("the type-A ring admits only S_n actions");
  }
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int sign = 1;
    std::vector<std::pair<Variable, int>> factors;
    for (const auto& [v, e] : m.factors()) {
      auto [s, image] = act_on_variable(g, v);
      if (s < 0 && (e % 2)) sign = -sign;
      factors.emplace_back(image, e);
    }
    out.add_term(Monomial(std::move(factors)), c * sign);
  }
  return out;
}

Polynomial act(const Permutation& g, const Polynomial& p, RingSpec spec) {
  return act(SignedPermutation::from_permutation(g), p, spec);
}

std::vector<Monomial> quad_generators(int n) {
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back(mono({Variable::u(i), Variable::w(i, j)}));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        out.push_back(mono({Variable::w(i, j), Variable::w(i, k)}));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        out.push_back(mono({Variable::v(i, j), Variable::w(j, k)}));
  return out;
}

namespace {

// Row-major total order on t-variables: t12 < t13 < ... < t1n < t23 < ...
bool t_var_less(const Variable& a, const Variable& b) {
  return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
}

void check_standard_type_a(const Monomial& m, int n) {
  if (!m.squarefree())
    throw std::invalid_argument("pairing input must be squarefree");
  std::set<int> levels;
  for (const auto& [v, e] : m.factors()) {
    if (v.kind != VarKind::T || v.j > n)
      throw std::invalid_argument("pairing input must be a t-monomial in the "
                                  "rank-n ring");
    if (!levels.insert(v.j).second)
      throw std::invalid_argument(
          "pairing input is not standard: two variables share level " +
          std::to_string(v.j));
  }
}

}  // namespace

Monomial pairing_phi(const Monomial& m, int n) {
  check_standard_type_a(m, n);
  std::vector<Variable> vars;
  for (const auto& [v, e] : m.factors()) vars.push_back(v);
  std::vector<std::pair<Variable, int>> image;
  while (!vars.empty()) {
    auto top_it = std::max_element(vars.begin(), vars.end(), t_var_less);
    Variable top = *top_it;
    vars.erase(top_it);
    const int i0 = top.i, j0 = top.j;
    // Case 1: another variable leaving i0.
    auto first_it = vars.end();
    for (auto it = vars.begin(); it != vars.end(); ++it)
      if (it->i == i0 && (first_it == vars.end() || t_var_less(*first_it, *it)))
        first_it = it;
    if (first_it != vars.end()) {
      int k0 = first_it->j;
      vars.erase(first_it);
      image.emplace_back(Variable::w(i0, k0), 1);
      image.emplace_back(Variable::w(i0, j0), 1);
      continue;
    }
    // Case 2: a variable entering i0.
    auto into_it = vars.end();
    for (auto it = vars.begin(); it != vars.end(); ++it)
      if (it->j == i0 && (into_it == vars.end() || t_var_less(*into_it, *it)))
        into_it = it;
    if (into_it != vars.end()) {
      int h0 = into_it->i;
      vars.erase(into_it);
      image.emplace_back(Variable::v(h0, i0), 1);
      image.emplace_back(Variable::w(i0, j0), 1);
      continue;
    }
    // Case 3: i0 is isolated below.
    image.emplace_back(Variable::u(i0), 1);
    image.emplace_back(Variable::w(i0, j0), 1);
  }
  return Monomial(std::move(image));
}

Monomial gamma_map(const Monomial& m) {
  std::vector<std::pair<Variable, int>> f;
  for (const auto& [v, e] : m.factors()) {
    switch (v.kind) {
      case VarKind::U:
        break;  // u_i -> 1
      case VarKind::V:
      case VarKind::W:
      case VarKind::UPlus:
      case VarKind::UMinus:
        f.emplace_back(Variable::t(v.i, v.j), e);
        break;
      case VarKind::T:
        f.emplace_back(v, e);
        break;
    }
  }
  return Monomial(std::move(f));
}

Polynomial gamma_map(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(gamma_map(m), c);
  return out;
}

std::vector<Monomial> fixed_basis(int n) {
  std::vector<Monomial> out;
  for (const auto& m : standard_basis(RingSpec{RingSpecKind::AT, n}))
    out.push_back(pairing_phi(m, n));
  return out;
}

bool factors_into_quad_generators(const Monomial& m, int n) {
  auto quads = quad_generators(n);
  std::function<bool(const Monomial&)> rec = [&](const Monomial& rest) {
    if (rest.is_one()) return true;
    Variable least = rest.factors().front().first;
    for (const auto& q : quads) {
      if (q.exponent(least) == 0 || !q.divides(rest)) continue;
      if (rec(rest.divided_by(q))) return true;
    }
    return false;
  };
  return rec(m);
}

}  // namespace peaklab
