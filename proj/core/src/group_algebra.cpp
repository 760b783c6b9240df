#include "peaklab/group_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "peaklab/parallel.hpp"

namespace peaklab {

GroupAlgebraElement::GroupAlgebraElement(GroupId id)
    : table_(GroupTable::get(id)) {}

GroupAlgebraElement::GroupAlgebraElement(
    std::shared_ptr<const GroupTable> table)
    : table_(std::move(table)) {}

GroupAlgebraElement GroupAlgebraElement::zero(GroupId id) {
  return GroupAlgebraElement(id);
}

GroupAlgebraElement GroupAlgebraElement::one(GroupId id) {
  GroupAlgebraElement e(id);
  e.set_coefficient(e.table_->identity_index(), 1);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::basis_element(
    GroupId id, const std::vector<int>& window) {
  GroupAlgebraElement e(id);
  e.set_coefficient(e.table_->index_of(window), 1);
  return e;
}

Rat GroupAlgebraElement::coefficient(uint32_t idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat GroupAlgebraElement::coefficient_of_window(
    const std::vector<int>& window) const {
  return coefficient(table_->index_of(window));
}

void GroupAlgebraElement::set_coefficient(uint32_t idx, const Rat& c) {
  if (peaklab::is_zero(c))
    terms_.erase(idx);
  else
    terms_[idx] = c;
}

void GroupAlgebraElement::add_term(uint32_t idx, const Rat& c) {
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    if (!peaklab::is_zero(c)) terms_.emplace(idx, c);
    return;
  }
  it->second += c;
  if (peaklab::is_zero(it->second)) terms_.erase(it);
}

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& o) const {
  if (!(group() == o.group()))
    throw std::invalid_argument("group mismatch in addition");
  GroupAlgebraElement out = *this;
  for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(
    const GroupAlgebraElement& o) const {
  if (!(group() == o.group()))
    throw std::invalid_argument("group mismatch in subtraction");
  GroupAlgebraElement out = *this;
  for (const auto& [idx, c] : o.terms_) out.add_term(idx, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rat& c) const {
  GroupAlgebraElement out(table_);
  if (peaklab::is_zero(c)) return out;
  for (const auto& [idx, v] : terms_) out.terms_.emplace(idx, v * c);
  return out;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return group() == o.group() && terms_ == o.terms_;
}

std::string GroupAlgebraElement::to_json_string() const {
  nlohmann::ordered_json j;
  j["group"] = table_->id().tag();
  j["n"] = table_->id().n;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : terms_) {
    nlohmann::ordered_json t;
    t["w"] = table_->window_string(idx);
    t["c"] = rat_to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

GroupAlgebraElement GroupAlgebraElement::from_json_string(
    const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::string tag = j.at("group").get<std::string>();
  GroupKind kind;
  if (tag == "S")
    kind = GroupKind::SymmetricA;
  else if (tag == "B")
    kind = GroupKind::HyperoctahedralB;
  else
    throw std::invalid_argument("unknown group tag: " + tag);
  GroupAlgebraElement e(GroupId{kind, j.at("n").get<int>()});
  for (const auto& t : j.at("terms")) {
    uint32_t idx = e.table_->index_of_string(t.at("w").get<std::string>());
    e.add_term(idx, rat_from_string(t.at("c").get<std::string>()));
  }
  return e;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b) {
  if (!(a.group() == b.group()))
    throw std::invalid_argument("group mismatch in multiplication");
  const GroupTable& table = a.table();
  const uint32_t order = table.order();

  std::vector<std::pair<uint32_t, const Rat*>> at, bt;
  at.reserve(a.terms().size());
  bt.reserve(b.terms().size());
  for (const auto& [idx, c] : a.terms()) at.emplace_back(idx, &c);
  for (const auto& [idx, c] : b.terms()) bt.emplace_back(idx, &c);

  // Idempotent families carry very few distinct coefficient values (one per
  // descent statistic), so precomputing all pairwise coefficient products
  // turns the inner loop into pure additions.
  std::map<Rat, uint32_t> avals, bvals;
  std::vector<uint32_t> acls(at.size()), bcls(bt.size());
  for (size_t i = 0; i < at.size(); ++i)
    acls[i] = avals.emplace(*at[i].second, (uint32_t)avals.size()).first->second;
  for (size_t i = 0; i < bt.size(); ++i)
    bcls[i] = bvals.emplace(*bt[i].second, (uint32_t)bvals.size()).first->second;
  const bool cache_products = avals.size() * bvals.size() <= 4096;
  std::vector<Rat> products;
  if (cache_products) {
    std::vector<const Rat*> av(avals.size()), bv(bvals.size());
    for (const auto& [v, i] : avals) av[i] = &v;
    for (const auto& [v, i] : bvals) bv[i] = &v;
    products.resize(avals.size() * bvals.size());
    for (size_t i = 0; i < av.size(); ++i)
      for (size_t j = 0; j < bv.size(); ++j)
        products[i * bv.size() + j] = (*av[i]) * (*bv[j]);
  }

  size_t workers = std::min<size_t>(max_threads(), std::max<size_t>(at.size(), 1));
  std::vector<std::vector<Rat>> partial(workers);
  size_t chunk = at.empty() ? 1 : (at.size() + workers - 1) / workers;
  parallel_for(workers, [&](size_t w) {
    size_t begin = w * chunk, end = std::min(at.size(), begin + chunk);
    if (begin >= end) return;
    auto& acc = partial[w];
    acc.assign(order, Rat(0));
    for (size_t i = begin; i < end; ++i) {
      const uint32_t ga = at[i].first;
      for (size_t j = 0; j < bt.size(); ++j) {
        uint32_t target = table.compose(ga, bt[j].first);
        if (cache_products)
          acc[target] += products[acls[i] * bvals.size() + bcls[j]];
        else
          acc[target] += (*at[i].second) * (*bt[j].second);
      }
    }
  });

  GroupAlgebraElement out(a.table_ptr());
  for (uint32_t g = 0; g < order; ++g) {
    Rat sum(0);
    for (auto& acc : partial)
      if (!acc.empty()) sum += acc[g];
    if (!is_zero(sum)) out.set_coefficient(g, sum);
  }
  return out;
}

GroupAlgebraElement phi_push(const GroupAlgebraElement& a) {
  if (a.group().kind != GroupKind::HyperoctahedralB)
    throw std::invalid_argument("phi_push expects an element over B_n");
  GroupId target{GroupKind::SymmetricA, a.group().n};
  GroupAlgebraElement out(target);
  const GroupTable& tt = out.table();
  for (const auto& [idx, c] : a.terms())
    out.add_term(a.table().forgotten_index(idx, tt), c);
  return out;
}

GroupAlgebraElement z2n_projector(int n) {
  if (n < 1) throw std::invalid_argument("z2n_projector needs n >= 1");
  GroupAlgebraElement e(GroupId{GroupKind::HyperoctahedralB, n});
  Rat coeff(1);
  coeff /= Rat(Int(1) << n);
  std::vector<int> window(n);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i)
      window[i] = (mask >> i) & 1 ? -(i + 1) : (i + 1);
    e.set_coefficient(e.table().index_of(window), coeff);
  }
  return e;
}

bool FamilyDiagnosis::pass() const {
  if (!sum_is_identity) return false;
  for (const auto& row : pair_ok)
    for (bool ok : row)
      if (!ok) return false;
  return true;
}

std::string FamilyDiagnosis::summary() const {
  std::ostringstream out;
  out << (pass() ? "pass" : "fail");
  if (!sum_is_identity) out << "; sum != 1";
  for (size_t i = 0; i < pair_ok.size(); ++i)
    for (size_t j = 0; j < pair_ok[i].size(); ++j)
      if (!pair_ok[i][j])
        out << "; E_" << i << "E_" << j
            << (i == j ? " != E_" + std::to_string(i) : " != 0");
  return out.str();
}

FamilyDiagnosis idempotent_family_check(
    const std::vector<GroupAlgebraElement>& family) {
  if (family.empty()) throw std::invalid_argument("empty family");
  const GroupId id = family.front().group();
  for (const auto& e : family)
    if (!(e.group() == id))
      throw std::invalid_argument("family spans several groups");

  FamilyDiagnosis diag;
  size_t k = family.size();
  diag.pair_ok.assign(k, std::vector<bool>(k, false));
  // The products are independent; check-level parallelism is handled by the
  // convolution itself so results stay deterministic.
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      GroupAlgebraElement prod = multiply(family[i], family[j]);
      if (i == j)
        diag.pair_ok[i][j] = prod == family[i];
      else
        diag.pair_ok[i][j] = prod.is_zero();
    }
  GroupAlgebraElement sum = GroupAlgebraElement::zero(id);
  for (const auto& e : family) sum = sum + e;
  diag.sum_is_identity = sum == GroupAlgebraElement::one(id);
  return diag;
}

ClassFunction::ClassFunction(int n, std::vector<Rat> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != partitions_of(n).size())
    throw std::invalid_argument("one value per partition of n required");
}

const Rat& ClassFunction::value_at(const Partition& cycle_type) const {
  auto parts = partitions_of(n_);
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i] == cycle_type) return values_[i];
  throw std::invalid_argument("not a cycle type of S_n: " +
                              cycle_type.to_string());
}

Rat ClassFunction::dimension() const {
  if (values_.empty()) return Rat(0);
  return values_.back();  // (1,1,...,1) is last in reverse-lex order
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
  std::vector<Rat> v(values_);
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return ClassFunction(n_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return n_ == o.n_ && values_ == o.values_;
}

std::string ClassFunction::to_string() const {
  std::ostringstream out;
  auto parts = partitions_of(n_);
  out << "{";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ", ";
    out << "(" << parts[i].to_string() << "): " << rat_to_string(values_[i]);
  }
  out << "}";
  return out.str();
}

namespace {

// chi(g) = sum_h e[(g h)^{-1} h], evaluated through the composition table.
Rat ideal_trace(const GroupAlgebraElement& e, uint32_t g) {
  const GroupTable& t = e.table();
  Rat total(0);
  for (uint32_t h = 0; h < t.order(); ++h) {
    uint32_t gh = t.compose(g, h);
    auto it = e.terms().find(t.compose(t.inverse(gh), h));
    if (it != e.terms().end()) total += it->second;
  }
  return total;
}

}  // namespace

ClassFunction left_ideal_character(const GroupAlgebraElement& e) {
  if (e.group().kind != GroupKind::SymmetricA)
    throw std::invalid_argument(
        "left_ideal_character reports S_n classes; use left_ideal_dimension "
        "for B_n");
  if (!(multiply(e, e) == e))
    throw std::invalid_argument("left_ideal_character requires an idempotent");
  const GroupTable& t = e.table();
  const uint32_t classes = t.class_count();
  std::vector<Rat> values(classes);
  for (uint32_t c = 0; c < classes; ++c)
    values[c] = ideal_trace(e, t.class_representative(c));
  // Class-constancy audit on the full group (the groups in play are small).
  std::vector<Rat> audit(t.order());
  parallel_for(t.order(), [&](size_t g) {
    audit[g] = ideal_trace(e, static_cast<uint32_t>(g));
  });
  for (uint32_t g = 0; g < t.order(); ++g)
    if (audit[g] != values[t.class_of(g)])
      throw std::runtime_error("trace is not constant on conjugacy classes");
  return ClassFunction(e.group().n, std::move(values));
}

Rat left_ideal_dimension(const GroupAlgebraElement& e) {
  if (!(multiply(e, e) == e))
    throw std::invalid_argument("left_ideal_dimension requires an idempotent");
  return Rat(Int(e.table().order())) *
         e.coefficient(e.table().identity_index());
}

ClassFunction regular_character(int n) {
  auto parts = partitions_of(n);
  std::vector<Rat> values(parts.size(), Rat(0));
  values.back() = Rat(factorial(n));
  return ClassFunction(n, std::move(values));
}

}  // namespace peaklab
