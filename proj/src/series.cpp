#include "hankel/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

SeriesYX::SeriesYX(int order) : order_(order), c_(static_cast<size_t>(order) + 1) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
}

SeriesYX::SeriesYX(int order, std::vector<Poly> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c_.resize(static_cast<size_t>(order) + 1);
}

SeriesYX SeriesYX::constant(int order, const Poly& c) {
  SeriesYX s(order);
  s.c_[0] = c;
  return s;
}

SeriesYX SeriesYX::y_power(int order, int k) {
  SeriesYX s(order);
  if (k <= order) s.c_[k] = Poly(1L);
  return s;
}

SeriesYX& SeriesYX::operator+=(const SeriesYX& o) {
  if (o.order_ != order_) throw std::invalid_argument("series order mismatch");
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

SeriesYX& SeriesYX::operator-=(const SeriesYX& o) {
  if (o.order_ != order_) throw std::invalid_argument("series order mismatch");
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

SeriesYX SeriesYX::operator-() const {
  SeriesYX r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
  return r;
}

SeriesYX SeriesYX::shift(int k) const {
  SeriesYX r(order_);
  for (int i = 0; i + k <= order_; ++i) r.c_[i + k] = c_[i];
  return r;
}

SeriesYX SeriesYX::inverse() const {
  if (c_[0].degree() != 0) throw std::domain_error("series inverse needs a nonzero constant leading term");
  return solve(constant(order_, Poly(1L)), *this);
}

SeriesYX SeriesYX::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  SeriesYX base = *this, r = constant(order_, Poly(1L));
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

SeriesYX SeriesYX::solve(const SeriesYX& num, const SeriesYX& den) {
  if (num.order_ != den.order_) throw std::invalid_argument("series order mismatch");
  if (den.c_[0].is_zero()) throw std::domain_error("series division by a multiple of y");
  SeriesYX f(num.order_);
  for (int k = 0; k <= num.order_; ++k) {
    Poly s = num.c_[k];
    for (int j = 0; j < k; ++j) s -= f.c_[j] * den.c_[k - j];
    auto [q, r] = divmod(s, den.c_[0]);
    if (!r.is_zero())
      throw std::logic_error("series quotient leaves Q[x] at y^" + std::to_string(k));
    f.c_[k] = std::move(q);
  }
  return f;
}

SeriesYX operator+(SeriesYX a, const SeriesYX& b) { return a += b; }
SeriesYX operator-(SeriesYX a, const SeriesYX& b) { return a -= b; }

SeriesYX operator*(const SeriesYX& a, const SeriesYX& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  const int n = a.order();
  SeriesYX r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

SeriesYX operator*(const Poly& s, const SeriesYX& a) {
  SeriesYX r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = s * a[k];
  return r;
}

}  // namespace hankel
