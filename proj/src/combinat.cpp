#include "hankel/combinat.hpp"

#include <stdexcept>

namespace hankel {

Int factorial(long m) {
  if (m < 0) throw std::domain_error("factorial of a negative integer");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Int double_factorial(long m) {
  if (m < -1) throw std::domain_error("double factorial below -1");
  if (m <= 0) return Int(1);
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Rat binom(const Rat& top, long k) {
  if (k < 0) return Rat(0);
  Rat num(1);
  for (long i = 0; i < k; ++i) num *= top - i;
  return num / Rat(factorial(k));
}

Rat binom(long top, long k) {
  if (k < 0) return Rat(0);
  if (top >= 0) return Rat(binom_classic(top, k));
  // negative integer top: (-1)^k C(k - top - 1, k)
  Int v = binom_classic(k - top - 1, k);
  return Rat(k % 2 ? Int(-v) : v);
}

Int binom_classic(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rat pow_rat(const Rat& b, long e) {
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    return pow_rat(Rat(1 / b), -e);
  }
  Rat r(1), base = b;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

}  // namespace hankel
