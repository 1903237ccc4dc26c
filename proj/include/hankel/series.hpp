#pragma once

#include <vector>

#include "hankel/poly.hpp"

namespace hankel {

// Power series in y truncated after y^order, with coefficients in Q[x].
// Products only ever look at coefficients 0..k to produce coefficient k.
class SeriesYX {
 public:
  explicit SeriesYX(int order = 0);
  SeriesYX(int order, std::vector<Poly> coeffs);  // pads or truncates to order+1

  static SeriesYX constant(int order, const Poly& c);
  static SeriesYX y_power(int order, int k);  // y^k, zero if k > order

  int order() const { return order_; }
  const Poly& operator[](int k) const { return c_.at(k); }
  Poly& operator[](int k) { return c_.at(k); }
  const std::vector<Poly>& coeffs() const { return c_; }

  SeriesYX& operator+=(const SeriesYX& o);
  SeriesYX& operator-=(const SeriesYX& o);
  SeriesYX operator-() const;

  SeriesYX shift(int k) const;  // times y^k
  SeriesYX pow(int e) const;    // e >= 0; negative e needs a unit constant term
  SeriesYX inverse() const;     // requires coefficient 0 to be a nonzero constant

  bool operator==(const SeriesYX& o) const { return order_ == o.order_ && c_ == o.c_; }

  // f with f*den == num (mod y^{order+1}); each step divides exactly by den[0].
  // Throws std::logic_error when some step leaves a remainder.
  static SeriesYX solve(const SeriesYX& num, const SeriesYX& den);

 private:
  int order_;
  std::vector<Poly> c_;
};

SeriesYX operator+(SeriesYX a, const SeriesYX& b);
SeriesYX operator-(SeriesYX a, const SeriesYX& b);
SeriesYX operator*(const SeriesYX& a, const SeriesYX& b);
SeriesYX operator*(const Poly& s, const SeriesYX& a);

}  // namespace hankel
