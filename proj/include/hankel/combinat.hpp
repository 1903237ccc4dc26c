#pragma once

#include "hankel/rat.hpp"

namespace hankel {

Int factorial(long m);  // m >= 0
Int double_factorial(long m);  // m >= -1; (-1)!! = 0!! = 1
// top (top-1) ... (top-k+1) / k!, for any rational top. binom(top, 0) = 1; k < 0 gives 0.
Rat binom(const Rat& top, long k);
// Integer-top shorthand, same falling-factorial semantics.
Rat binom(long top, long k);
// Classical range-restricted binomial: 0 unless 0 <= k <= n.
Int binom_classic(long n, long k);
Rat pow_rat(const Rat& b, long e);

}  // namespace hankel
