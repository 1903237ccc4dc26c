#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hankel/rat.hpp"

namespace hankel {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial has no coefficients and degree kMinusInfinity.
class Poly {
 public:
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(long c);  // NOLINT: implicit so formulas read like the math
  Poly(const Rat& c);  // NOLINT
  explicit Poly(std::vector<Rat> coeffs);

  static Poly x();
  static Poly monomial(const Rat& c, int k);

  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  Poly operator-() const;

  Poly derivative(int k = 1) const;
  Rat eval(const Rat& at) const;
  Poly compose_affine(const Rat& a, const Rat& b) const;  // p(a*x + b)
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, Poly p);
Poly operator*(Poly p, const Rat& s);
Poly operator*(long s, Poly p);
Poly operator*(Poly p, long s);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

// Euclidean division over Q. Throws std::domain_error for a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);

// a / b when b divides a; a nonzero remainder throws std::logic_error naming both degrees.
Poly exact_div(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

// Human form, ascending: "5 - 2x", "84 + 45x + 10x^2 + x^3".
std::string to_string(const Poly& p);

}  // namespace hankel
