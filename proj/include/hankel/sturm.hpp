#pragma once

#include <utility>
#include <vector>

#include "hankel/poly.hpp"

namespace hankel {

// Distinct real roots of p in (a, b]. Squarefree part is taken internally.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

// Half-open rational intervals (lo, hi], pairwise disjoint, one distinct real root each, ascending.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p);

// Every real root lies in (-B, B].
Rat cauchy_bound(const Poly& p);

}  // namespace hankel
