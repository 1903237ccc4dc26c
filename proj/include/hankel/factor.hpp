#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hankel/rat.hpp"

namespace hankel {

enum class Primality { unit, prime, probable_prime, composite };

struct FactorReport {
  Int input;
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> small_factors;  // ascending primes <= bound
  Int cofactor{1};  // no prime factor <= bound
  unsigned long bound = 1000000;
  Primality cofactor_kind = Primality::unit;
};

// Trial division by every prime <= bound. N == 0 and bound < 2 are rejected.
FactorReport factor_smooth(const Int& n, unsigned long bound = 1000000);

// Miller-Rabin with the first 13 prime bases, a proof for n < 3317044064679887385961981.
// Above that gmp's BPSW answer is returned as probable_prime.
Primality classify(const Int& n);

const char* to_string(Primality p);

// "2^2·7^2·37 · 41740796329"; the cofactor is appended after " · " when it exceeds 1.
std::string render(const FactorReport& r);

}  // namespace hankel
