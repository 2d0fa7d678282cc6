#include "bihom/grading.hpp"

#include <stdexcept>

namespace bihom {

GradingGroup::GradingGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (int m : moduli_) {
    if (m <= 0) throw std::invalid_argument("grading moduli must be positive");
    size_ *= m;
  }
}

GradingGroup::Element GradingGroup::reduce(Element e) const {
  if (e.size() != moduli_.size()) throw std::invalid_argument("grading element arity mismatch");
  for (size_t i = 0; i < e.size(); ++i) e[i] = ((e[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
  return e;
}

GradingGroup::Element GradingGroup::add(const Element& a, const Element& b) const {
  Element r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return reduce(std::move(r));
}

GradingGroup::Element GradingGroup::negate(const Element& a) const {
  Element r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] = -r[i];
  return reduce(std::move(r));
}

std::vector<GradingGroup::Element> GradingGroup::elements() const {
  std::vector<Element> all;
  Element cur(moduli_.size(), 0);
  all.reserve(size_);
  while (true) {
    all.push_back(cur);
    size_t i = moduli_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < moduli_[i]) break;
      cur[i] = 0;
      if (i == 0) return all;
    }
    if (moduli_.empty()) return all;
  }
}

int GradingGroup::index(const Element& e) const {
  Element r = reduce(e);
  int idx = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + r[i];
  return idx;
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<Scalar> table)
    : group_(std::move(group)), table_(std::move(table)) {
  if (int(table_.size()) != group_.size() * group_.size())
    throw std::invalid_argument("bicharacter table size mismatch");
}

Bicharacter Bicharacter::trivial(const GradingGroup& g) {
  return Bicharacter(g, std::vector<Scalar>(size_t(g.size()) * g.size(), Scalar(1)));
}

Bicharacter Bicharacter::super_sign() {
  GradingGroup z2({2});
  std::vector<Scalar> t(4, Scalar(1));
  t[3] = Scalar(-1);  // eps(1,1) = -1
  return Bicharacter(z2, std::move(t));
}

const Scalar& Bicharacter::value(const GradingGroup::Element& a,
                                 const GradingGroup::Element& b) const {
  return table_[size_t(group_.index(a)) * group_.size() + group_.index(b)];
}

std::string Bicharacter::first_violation() const {
  auto els = group_.elements();
  for (const auto& a : els)
    for (const auto& b : els) {
      if (value(a, b).is_zero()) return "bicharacter value zero";
      if (value(a, b) * value(b, a) != Scalar(1)) return "eps(a,b)eps(b,a) != 1";
    }
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els) {
        if (value(a, group_.add(b, c)) != value(a, b) * value(a, c))
          return "eps(a,b+c) != eps(a,b)eps(a,c)";
        if (value(group_.add(a, b), c) != value(a, c) * value(b, c))
          return "eps(a+b,c) != eps(a,c)eps(b,c)";
      }
  return "";
}

}  // namespace bihom
