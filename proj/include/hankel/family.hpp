#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/poly.hpp"

namespace hankel {

enum class FamilyKind { BinomBA, ThreeKMinus2M, Aex, ShiftThreeKPlus1, ShiftTwoKPlus2 };

struct FamilyId {
  FamilyKind kind = FamilyKind::BinomBA;
  int beta = 3;
  int alpha = 1;

  static FamilyId binom(int beta, int alpha);  // beta >= 1
  static FamilyId three_k_minus_2m() { return {FamilyKind::ThreeKMinus2M, 0, 0}; }
  static FamilyId aex() { return {FamilyKind::Aex, 0, 0}; }
  static FamilyId shift_3k1() { return {FamilyKind::ShiftThreeKPlus1, 0, 0}; }
  static FamilyId shift_2k2() { return {FamilyKind::ShiftTwoKPlus2, 0, 0}; }

  // "3,1", "2,1", "3k-2m", "aex", "3k+1-shift", "2k+2-shift", or any "beta,alpha".
  static FamilyId parse(std::string_view s);
  std::string name() const;

  bool is_binom(int b, int a) const { return kind == FamilyKind::BinomBA && beta == b && alpha == a; }
  auto operator<=>(const FamilyId&) const = default;
};

// The eight names the command line accepts.
std::vector<FamilyId> named_families();
// The five families the acceptance suite sweeps: (3,1), (2,1), (3,0), 3k-2m, aex.
std::vector<FamilyId> core_families();

// a_k(x), memoized; k >= 0.
const Poly& a_poly(const FamilyId& f, long k);
// Direct summation without the memo; used as an oracle.
Poly a_poly_direct(const FamilyId& f, long k);
// c_k = sum_{m=0..k} a_m a_{k-m}; c_{-1} = 0.
const Poly& conv_poly(const FamilyId& f, long k);

}  // namespace hankel
