#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "peaklab/group.hpp"
#include "peaklab/rational.hpp"

namespace peaklab {

// Sparse exact-rational linear combination of group elements.  Immutable in
// spirit: all operations return new values.  Terms are keyed by the canonical
// element index, so iteration order matches the lexicographic window order.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupId id);
  explicit GroupAlgebraElement(std::shared_ptr<const GroupTable> table);

  static GroupAlgebraElement zero(GroupId id);
  static GroupAlgebraElement one(GroupId id);  // the identity group element
  static GroupAlgebraElement basis_element(GroupId id,
                                           const std::vector<int>& window);

  GroupId group() const { return table_->id(); }
  const GroupTable& table() const { return *table_; }
  std::shared_ptr<const GroupTable> table_ptr() const { return table_; }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<uint32_t, Rat>& terms() const { return terms_; }
  Rat coefficient(uint32_t idx) const;
  Rat coefficient_of_window(const std::vector<int>& window) const;

  void set_coefficient(uint32_t idx, const Rat& c);  // drops exact zeros
  void add_term(uint32_t idx, const Rat& c);

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const Rat& c) const;
  bool operator==(const GroupAlgebraElement& o) const;

  std::string to_json_string() const;
  static GroupAlgebraElement from_json_string(const std::string& text);

 private:
  std::shared_ptr<const GroupTable> table_;
  std::map<uint32_t, Rat> terms_;
};

// Convolution product; exact, deterministic, internally parallel over the
// left factor's terms.
GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b);

// Pushes k B_n -> k S_n along the sign-forgetting homomorphism.
GroupAlgebraElement phi_push(const GroupAlgebraElement& a);

// (1/2^n) * sum of all sign-change elements of B_n; central idempotent.
GroupAlgebraElement z2n_projector(int n);

// Exact diagnostics for a claimed complete orthogonal idempotent family.
struct FamilyDiagnosis {
  // pair_ok[i][j] records E_i E_j == (i == j ? E_i : 0).
  std::vector<std::vector<bool>> pair_ok;
  bool sum_is_identity = false;

  bool pass() const;
  std::string summary() const;
};

FamilyDiagnosis idempotent_family_check(
    const std::vector<GroupAlgebraElement>& family);

// Class function on S_n, stored per cycle type in partitions_of(n) order.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(int n, std::vector<Rat> values);

  int n() const { return n_; }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& value_at(const Partition& cycle_type) const;
  Rat dimension() const;  // value on the identity class (1^n)

  ClassFunction operator+(const ClassFunction& o) const;
  bool operator==(const ClassFunction& o) const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Rat> values_;
};

// Character of the left ideal kG.e for an idempotent e:
// chi(g) = sum_h [coefficient of h in g.h.e].  Verifies idempotency and,
// for S_n, class-constancy; throws on violation.  For B_n only the
// dimension is needed downstream, so the value is reported on the identity
// class of the underlying S_n cycle-type classification of hat(w); see
// left_ideal_dimension for the B_n entry point.
ClassFunction left_ideal_character(const GroupAlgebraElement& e);

// |G| * (coefficient of the identity in e); works over S_n and B_n.
Rat left_ideal_dimension(const GroupAlgebraElement& e);

// Regular character: |G| on the identity class, 0 elsewhere.
ClassFunction regular_character(int n);

}  // namespace peaklab
