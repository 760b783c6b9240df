#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace peaklab {

// Variable alphabets.  T lives in the type-A ring; U is shared; UPlus/UMinus
// belong to the u-presentation of the type-B ring and V/W to its
// diagonalized presentation.
enum class VarKind : uint8_t { T, U, UPlus, UMinus, V, W };

enum class RingSpecKind : uint8_t { AT, BU, BVW, BVW_GR };

struct RingSpec {
  RingSpecKind kind;
  int n;

  bool operator==(const RingSpec&) const = default;
  std::string name() const;  // "a-t", "b-u", "b-vw", "b-vw-gr"
  static RingSpec parse(const std::string& name, int n);
};

struct Variable {
  VarKind kind;
  // Pair variables carry 1 <= i < j; U carries only i (j stores i too).
  int i = 0;
  int j = 0;

  static Variable t(int i, int j);
  static Variable u(int i);
  static Variable uplus(int i, int j);
  static Variable uminus(int i, int j);
  static Variable v(int i, int j);
  static Variable w(int i, int j);

  bool is_pair() const { return kind != VarKind::U; }
  // The level partial order groups variables by their largest index.
  int level() const { return kind == VarKind::T ? j - 1 : (is_pair() ? j : i); }
  // Position inside the level; combined with level() this gives the total
  // variable order refining the level partial order.
  int rank_in_level() const;

  bool operator==(const Variable&) const = default;
  std::strong_ordering operator<=>(const Variable& o) const;

  std::string to_string() const;  // "t12", "u3", "u+12", "w5,10"
  static Variable parse(const std::string& text);
};

// Sparse exponent vector, kept sorted by increasing variable.
class Monomial {
 public:
  Monomial() = default;  // the empty monomial 1
  explicit Monomial(std::vector<std::pair<Variable, int>> factors);
  static Monomial var(Variable v, int exp = 1);

  const std::vector<std::pair<Variable, int>>& factors() const {
    return factors_;
  }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  // Total exponent on pair (edge) variables; the u-adic complement of this
  // is the filtration degree.
  int edge_degree() const;
  int exponent(const Variable& v) const;
  bool divides(const Monomial& m) const;
  Monomial multiplied_by(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;  // requires divisibility
  bool squarefree() const;

  bool operator==(const Monomial&) const = default;

  std::string to_string() const;  // "*"-joined factors, "v12^2*w13"
  static Monomial parse(const std::string& text);

 private:
  std::vector<std::pair<Variable, int>> factors_;
};

// Graded reverse-lexicographic order refining the level partial order: lower
// total degree first; for equal degrees the monomial with the larger
// exponent on the smallest differing variable is the smaller one.  This is
// the fixed order used for all normal forms.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_less(a, b);
  }
};

}  // namespace peaklab
