#include "bihom/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bihom {

namespace {

using Poly = std::vector<mpz_class>;  // dense, constant term first

Poly poly_one() { return {mpz_class(1)}; }

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division, divisor monic.  Used only for x^m - 1 over the product of
// lower cyclotomic polynomials, so the remainder is known to vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
  poly_trim(num);
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
  while (num.size() >= den.size() && !num.empty()) {
    mpz_class c = num.back();  // den is monic
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
  }
  if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

std::map<int, Poly>& cyclo_cache() {
  static std::map<int, Poly> cache;
  return cache;
}
std::mutex& cyclo_mutex() {
  static std::mutex m;
  return m;
}

const Poly& cyclo_poly_locked(int m) {
  auto& cache = cyclo_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  Poly num(m + 1, mpz_class(0));
  num[0] = -1;
  num[m] = 1;
  Poly den = poly_one();
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = poly_mul(den, cyclo_poly_locked(d));
  return cache.emplace(m, poly_div_exact(std::move(num), den)).first->second;
}

// Reduces a rational-coefficient polynomial modulo Phi_m in place.
void reduce_mod_cyclo(std::vector<mpq_class>& p, int m) {
  const Poly& phi = cyclotomic_polynomial(m);
  size_t deg = phi.size() - 1;
  while (p.size() > deg) {
    mpq_class c = p.back();
    size_t shift = p.size() - phi.size();
    if (c != 0)
      for (size_t i = 0; i < phi.size(); ++i) {
        p[shift + i] -= c * mpq_class(phi[i]);
        p[shift + i].canonicalize();
      }
    p.pop_back();
  }
  p.resize(deg, mpq_class(0));
}

std::vector<mpq_class> cyclo_mul(const std::vector<mpq_class>& a,
                                 const std::vector<mpq_class>& b, int m) {
  std::vector<mpq_class> r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
      r[i + j].canonicalize();
    }
  }
  reduce_mod_cyclo(r, m);
  return r;
}

bool vec_is_zero(const std::vector<mpq_class>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// Extended Euclid over Q[x]: returns u with u*a = gcd (mod b), where
// b = Phi_m is irreducible, so gcd is a nonzero constant for a != 0.
std::vector<mpq_class> cyclo_inverse(std::vector<mpq_class> a, int m) {
  const Poly& phiz = cyclotomic_polynomial(m);
  std::vector<mpq_class> r0(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) r0[i] = mpq_class(phiz[i]);
  std::vector<mpq_class> r1 = std::move(a);
  auto trim = [](std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(r0);
  trim(r1);
  std::vector<mpq_class> s0 = {mpq_class(0)}, s1 = {mpq_class(1)};
  auto sub_scaled = [&](std::vector<mpq_class>& x, const std::vector<mpq_class>& y,
                        const mpq_class& c, size_t shift) {
    if (x.size() < y.size() + shift) x.resize(y.size() + shift, mpq_class(0));
    for (size_t i = 0; i < y.size(); ++i) {
      x[i + shift] -= c * y[i];
      x[i + shift].canonicalize();
    }
  };
  while (!r1.empty()) {
    // divide r0 by r1
    std::vector<mpq_class> q;
    while (r0.size() >= r1.size() && !r0.empty()) {
      mpq_class c = r0.back() / r1.back();
      c.canonicalize();
      size_t shift = r0.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
      q[shift] = c;
      sub_scaled(r0, r1, c, shift);
      trim(r0);
    }
    // (r0, r1) <- (r1, r0 - q*r1 which is now r0); same for s
    std::swap(r0, r1);
    std::vector<mpq_class> s2 = s0;
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) sub_scaled(s2, s1, q[i], i);
    trim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd = constant (Phi_m irreducible), inverse = s0 / r0
  if (r0.size() != 1) throw std::logic_error("cyclo_inverse: gcd not constant");
  std::vector<mpq_class> inv = std::move(s0);
  for (auto& c : inv) {
    c /= r0[0];
    c.canonicalize();
  }
  reduce_mod_cyclo(inv, m);
  return inv;
}

}  // namespace

int cyclotomic_degree(int m) {
  return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(cyclo_mutex());
  return cyclo_poly_locked(m);
}

Scalar::Scalar(long num, long den) : rat_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  rat_.canonicalize();
}

Scalar Scalar::root_of_unity(int m, long power) {
  long p = ((power % m) + m) % m;
  std::vector<mpq_class> coeffs(static_cast<size_t>(p) + 1, mpq_class(0));
  coeffs[static_cast<size_t>(p)] = 1;
  return cyclotomic(m, std::move(coeffs));
}

Scalar Scalar::cyclotomic(int m, std::vector<mpq_class> coeffs) {
  Scalar s;
  s.order_ = m;
  for (auto& c : coeffs) c.canonicalize();
  reduce_mod_cyclo(coeffs, m);
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (order_ == 0) {
    rat_.canonicalize();
    return;
  }
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  // constant: demote to plain rational
  rat_ = coeffs_.empty() ? mpq_class(0) : coeffs_[0];
  rat_.canonicalize();
  order_ = 0;
  coeffs_.clear();
}

bool Scalar::is_zero() const {
  if (order_ == 0) return rat_ == 0;
  return vec_is_zero(coeffs_);
}

const mpq_class& Scalar::rational() const {
  if (order_ != 0) throw std::domain_error("scalar is not rational");
  return rat_;
}

namespace {
// Promotes both operands to a common representation; returns the common order.
int promote(const Scalar& a, const Scalar& b, std::vector<mpq_class>& av,
            std::vector<mpq_class>& bv) {
  int m = a.order() != 0 ? a.order() : b.order();
  if (a.order() != 0 && b.order() != 0 && a.order() != b.order())
    throw std::invalid_argument("mixed cyclotomic orders");
  int deg = cyclotomic_degree(m);
  av.assign(static_cast<size_t>(deg), mpq_class(0));
  bv.assign(static_cast<size_t>(deg), mpq_class(0));
  if (a.order() != 0)
    av = a.coefficients();
  else
    av[0] = a.rational();
  if (b.order() != 0)
    bv = b.coefficients();
  else
    bv[0] = b.rational();
  return m;
}
}  // namespace

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.order_ == 0) {
    r.rat_ = -r.rat_;
  } else {
    for (auto& c : r.coeffs_) c = -c;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (order_ == 0 && o.order_ == 0) {
    rat_ += o.rat_;
    rat_.canonicalize();
    return *this;
  }
  std::vector<mpq_class> a, b;
  int m = promote(*this, o, a, b);
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] += b[i];
    a[i].canonicalize();
  }
  *this = cyclotomic(m, std::move(a));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (order_ == 0 && o.order_ == 0) {
    rat_ *= o.rat_;
    rat_.canonicalize();
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  std::vector<mpq_class> a, b;
  int m = promote(*this, o, a, b);
  *this = cyclotomic(m, cyclo_mul(a, b, m));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (order_ == 0) {
    Scalar r;
    r.rat_ = 1 / rat_;
    r.rat_.canonicalize();
    return r;
  }
  return cyclotomic(order_, cyclo_inverse(coeffs_, order_));
}

bool Scalar::operator==(const Scalar& o) const {
  if (order_ != o.order_) return false;  // canonical: demoted constants
  if (order_ == 0) return rat_ == o.rat_;
  return coeffs_ == o.coeffs_;
}

std::string Scalar::str() const {
  if (order_ == 0) {
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
  }
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class a = c > 0 ? c : mpq_class(-c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) {
      if (a.get_den() == 1)
        out << a.get_num().get_str();
      else
        out << a.get_num().get_str() << "/" << a.get_den().get_str();
      if (i > 0) out << "*";
    }
    if (i > 0) {
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

namespace {
mpq_class parse_fraction(const std::string& t) {
  if (t.empty()) throw std::invalid_argument("empty scalar literal");
  for (char ch : t)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw std::invalid_argument("bad scalar literal: " + t);
  mpq_class q(t);
  q.canonicalize();
  return q;
}
}  // namespace

Scalar Scalar::parse(const std::string& text, int cyclo_order) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty scalar literal");
  if (cyclo_order == 0 || t.find('z') == std::string::npos)
    return Scalar(parse_fraction(t));

  int deg = cyclotomic_degree(cyclo_order);
  std::vector<mpq_class> coeffs(static_cast<size_t>(std::max(deg, 1)), mpq_class(0));
  size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sign = t[pos] == '-' ? -1 : 1;
      ++pos;
    }
    size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string term = t.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw std::invalid_argument("bad scalar literal: " + text);
    mpq_class coef(1);
    long power = 0;
    size_t z = term.find('z');
    if (z == std::string::npos) {
      coef = parse_fraction(term);
    } else {
      std::string head = term.substr(0, z);
      if (!head.empty()) {
        if (head.back() == '*') head.pop_back();
        if (!head.empty()) coef = parse_fraction(head);
      }
      std::string tail = term.substr(z + 1);
      if (!tail.empty()) {
        if (tail[0] != '^') throw std::invalid_argument("bad scalar literal: " + text);
        power = std::stol(tail.substr(1));
      } else {
        power = 1;
      }
    }
    if (sign < 0) coef = -coef;
    long reduced = ((power % cyclo_order) + cyclo_order) % cyclo_order;
    std::vector<mpq_class> mono(static_cast<size_t>(reduced) + 1, mpq_class(0));
    mono[static_cast<size_t>(reduced)] = coef;
    reduce_mod_cyclo(mono, cyclo_order);
    if (coeffs.size() < mono.size()) coeffs.resize(mono.size(), mpq_class(0));
    for (size_t i = 0; i < mono.size(); ++i) {
      coeffs[i] += mono[i];
      coeffs[i].canonicalize();
    }
  }
  return cyclotomic(cyclo_order, std::move(coeffs));
}

}  // namespace bihom
