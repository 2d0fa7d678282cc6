#ifndef BIHOM_GRADING_HPP
#define BIHOM_GRADING_HPP

#include <map>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

/// Finite abelian group Z_{m1} x ... x Z_{mr}; elements are residue tuples.
class GradingGroup {
 public:
  using Element = std::vector<int>;

  GradingGroup() = default;
  explicit GradingGroup(std::vector<int> moduli);

  const std::vector<int>& moduli() const { return moduli_; }
  int size() const { return size_; }
  Element zero() const { return Element(moduli_.size(), 0); }
  Element reduce(Element e) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  /// All group elements in lexicographic order.
  std::vector<Element> elements() const;
  /// Lexicographic index of an element, for dense tables.
  int index(const Element& e) const;

  bool operator==(const GradingGroup& o) const { return moduli_ == o.moduli_; }

 private:
  std::vector<int> moduli_;
  int size_ = 1;
};

/// Skew-symmetric bicharacter eps: Gamma x Gamma -> K*, stored as a dense
/// table over the (finite) group.
class Bicharacter {
 public:
  Bicharacter() = default;
  Bicharacter(GradingGroup group, std::vector<Scalar> table);

  static Bicharacter trivial(const GradingGroup& g);
  /// Z_2 sign bicharacter (-1)^{ab}; the super convention.
  static Bicharacter super_sign();

  const GradingGroup& group() const { return group_; }
  const Scalar& value(const GradingGroup::Element& a, const GradingGroup::Element& b) const;

  /// Checks the three bicharacter identities by full enumeration; returns the
  /// first violated identity name, or empty string when all hold.
  std::string first_violation() const;

 private:
  GradingGroup group_;
  std::vector<Scalar> table_;  // [index(a) * |G| + index(b)]
};

}  // namespace bihom

#endif
