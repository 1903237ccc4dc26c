#include "hankel/poly.hpp"

#include <stdexcept>
#include <utility>

namespace hankel {

namespace {
const Rat kZero(0);
}

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
  p.c_[k] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rat& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly Poly::derivative(int k) const {
  Poly r = *this;
  for (int step = 0; step < k; ++step) {
    if (r.c_.empty()) break;
    std::vector<Rat> d(r.c_.size() - 1);
    for (size_t i = 1; i < r.c_.size(); ++i) d[i - 1] = r.c_[i] * static_cast<unsigned long>(i);
    r = Poly(std::move(d));
  }
  return r;
}

Rat Poly::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
  // Horner in the polynomial ring: acc = acc*(a x + b) + c_i
  Poly lin(std::vector<Rat>{b, a});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly base = *this, r(1L);
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Rat> r(x.size() + y.size() - 1);
  Rat t;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      mpq_mul(t.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
      r[i + j] += t;
    }
  }
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, Poly p) { return p *= s; }
Poly operator*(Poly p, const Rat& s) { return p *= s; }
Poly operator*(long s, Poly p) { return p *= Rat(s); }
Poly operator*(Poly p, long s) { return p *= Rat(s); }

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  const Rat inv_lead = 1 / b.lead();
  std::vector<Rat> q(static_cast<size_t>(a.degree() - db) + 1);
  Rat t;
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat f = rem[k + db] * inv_lead;
    if (f == 0) continue;
    q[k] = f;
    for (int j = 0; j <= db; ++j) {
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), d[j].get_mpq_t());
      rem[k + j] -= t;
    }
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw std::logic_error("inexact polynomial division: dividend degree " + std::to_string(a.degree()) +
                           ", divisor degree " + std::to_string(b.degree()) + ", remainder degree " +
                           std::to_string(r.degree()));
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rat(1 / a.lead());
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat& c = p.coeff(k);
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string m = to_string(mag);
    if (k == 0) {
      out += m;
      continue;
    }
    if (mag != 1) out += is_integer(mag) ? m : "(" + m + ")";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hankel
