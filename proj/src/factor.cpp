#include "hankel/factor.hpp"

#include <mutex>
#include <stdexcept>

namespace hankel {

namespace {

std::vector<unsigned long> primes_upto(unsigned long bound) {
  static std::mutex mu;
  static std::vector<unsigned long> cache;
  static unsigned long cached_bound = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (bound > cached_bound) {
    std::vector<bool> composite(bound + 1, false);
    cache.clear();
    for (unsigned long p = 2; p <= bound; ++p) {
      if (composite[p]) continue;
      cache.push_back(p);
      for (unsigned long m = p * p; m <= bound; m += p) composite[m] = true;
    }
    cached_bound = bound;
  }
  std::vector<unsigned long> out;
  for (auto p : cache) {
    if (p > bound) break;
    out.push_back(p);
  }
  return out;
}

bool mr_witness_passes(const Int& n, const Int& d, unsigned s, unsigned long a) {
  Int x, base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

Primality classify(const Int& n) {
  if (n < 2) return Primality::unit;
  static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (auto p : bases) {
    if (n == p) return Primality::prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  }
  static const Int limit("3317044064679887385961981");
  if (n >= limit) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) ? Primality::probable_prime : Primality::composite;
  }
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (auto a : bases)
    if (!mr_witness_passes(n, d, s, a)) return Primality::composite;
  return Primality::prime;
}

const char* to_string(Primality p) {
  switch (p) {
    case Primality::unit: return "unit";
    case Primality::prime: return "prime";
    case Primality::probable_prime: return "probable-prime";
    case Primality::composite: return "composite";
  }
  return "?";
}

FactorReport factor_smooth(const Int& n, unsigned long bound) {
  if (n == 0) throw std::domain_error("cannot factor zero");
  if (bound < 2) throw std::invalid_argument("trial-division bound must be >= 2");
  FactorReport rep;
  rep.input = n;
  rep.bound = bound;
  rep.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  for (auto p : primes_upto(bound)) {
    if (m == 1) break;
    if (Int(p) * p > m) {
      // what is left is prime; it belongs to the small part only if it is within the bound
      if (m <= bound) {
        rep.small_factors.emplace_back(m, 1U);
        m = 1;
      }
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) rep.small_factors.emplace_back(Int(p), e);
  }
  rep.cofactor = m;
  rep.cofactor_kind = classify(m);
  return rep;
}

std::string render(const FactorReport& r) {
  std::string out = r.sign < 0 ? "-" : "";
  bool any = false;
  for (const auto& [p, e] : r.small_factors) {
    if (any) out += "\xC2\xB7";
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
    any = true;
  }
  if (r.cofactor != 1) {
    if (any) out += " \xC2\xB7 ";
    out += r.cofactor.get_str();
    any = true;
  }
  if (!any) out += "1";
  return out;
}

}  // namespace hankel
