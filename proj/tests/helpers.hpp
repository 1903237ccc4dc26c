#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "hankel/poly.hpp"

namespace testing_util {

// Ascending integer or "p/q" strings.
inline hankel::Poly poly(std::initializer_list<const char*> coeffs) {
  std::vector<hankel::Rat> v;
  for (const char* c : coeffs) v.push_back(hankel::parse_rat(c));
  return hankel::Poly(std::move(v));
}

inline hankel::Rat rat(const char* s) { return hankel::parse_rat(s); }

inline hankel::Rat random_rat(std::mt19937_64& rng, long span = 20, long den = 6) {
  std::uniform_int_distribution<long> num(-span, span), d(1, den);
  return hankel::make_rat(num(rng), d(rng));
}

inline hankel::Poly random_poly(std::mt19937_64& rng, int max_degree, long span = 20, long den = 6) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<hankel::Rat> v(deg(rng) + 1);
  for (auto& c : v) c = random_rat(rng, span, den);
  return hankel::Poly(std::move(v));
}

}  // namespace testing_util
