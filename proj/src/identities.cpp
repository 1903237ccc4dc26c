#include <stdexcept>

#include "hankel/identity_lab.hpp"

namespace hankel {

std::vector<IdentityId> all_identities() {
  using I = IdentityId;
  return {I::L1_31, I::L2_31, I::L1_21, I::L2_21, I::L1_30, I::L2_30, I::L1_3k2m, I::L2_3k2m, I::L1_aex, I::L2_aex};
}

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::L1_31: return "L1_31";
    case IdentityId::L2_31: return "L2_31";
    case IdentityId::L1_21: return "L1_21";
    case IdentityId::L2_21: return "L2_21";
    case IdentityId::L1_30: return "L1_30";
    case IdentityId::L2_30: return "L2_30";
    case IdentityId::L1_3k2m: return "L1_3k2m";
    case IdentityId::L2_3k2m: return "L2_3k2m";
    case IdentityId::L1_aex: return "L1_aex";
    case IdentityId::L2_aex: return "L2_aex";
    case IdentityId::L1_30_printed: return "L1_30-printed";
  }
  return "?";
}

IdentityId parse_identity(const std::string& s) {
  for (auto id : all_identities())
    if (to_string(id) == s) return id;
  if (s == to_string(IdentityId::L1_30_printed)) return IdentityId::L1_30_printed;
  throw std::invalid_argument("unknown identity: " + s);
}

FamilyId identity_family(IdentityId id) {
  switch (id) {
    case IdentityId::L1_31:
    case IdentityId::L2_31: return FamilyId::binom(3, 1);
    case IdentityId::L1_21:
    case IdentityId::L2_21: return FamilyId::binom(2, 1);
    case IdentityId::L1_30:
    case IdentityId::L2_30:
    case IdentityId::L1_30_printed: return FamilyId::binom(3, 0);
    case IdentityId::L1_3k2m:
    case IdentityId::L2_3k2m: return FamilyId::three_k_minus_2m();
    case IdentityId::L1_aex:
    case IdentityId::L2_aex: return FamilyId::aex();
  }
  throw std::logic_error("unreachable");
}

Poly identity_residual(IdentityId id, long k) {
  if (k < 0) throw std::invalid_argument("identity index must be >= 0");
  const FamilyId fam = identity_family(id);
  const Poly x = Poly::x();
  auto a = [&](long i) -> const Poly& { return a_poly(fam, i); };
  auto c = [&](long i) -> const Poly& { return conv_poly(fam, i); };
  const Poly da = a(k).derivative();
  switch (id) {
    case IdentityId::L1_31:
      return (x - 3) * (2 * x - 3) * (4 * x - 3) * da -
             (2 * (2 * k + 3) * a(k + 1) - (8 * x * x - 18 * x + 27 * k + 36) * a(k) +
              4 * (2 * x * x - 6 * x + 3) * c(k) - 27 * (2 * x * x - 6 * x + 3) * c(k - 1));
    case IdentityId::L2_31: {
      const Poly x2 = x * x, x3 = x2 * x, x4 = x3 * x;
      return 4 * (2 * k + 5) * (x - 1) * a(k + 2) -
             (2 * (16 * x3 - 72 * x2 + 135 * x - 81) * k + 2 * (24 * x3 - 92 * x2 + 180 * x - 117)) * a(k + 1) +
             (27 * (2 * x - 3).pow(3) * k + 54 * (2 * x - 3) * (2 * x2 - 4 * x + 3)) * a(k) +
             8 * (x - 1) * (2 * x2 - 6 * x + 3) * c(k + 1) +
             2 * (8 * x4 - 114 * x3 + 324 * x2 - 297 * x + 81) * c(k) -
             27 * x * (2 * x - 3) * (2 * x2 - 12 * x + 9) * c(k - 1);
    }
    case IdentityId::L1_21:
      return 2 * x * (x - 2) * da - (k + 1) * a(k + 1) + (4 * k + 2 * (x + 1)) * a(k) - (x - 1) * c(k) +
             4 * (x - 1) * c(k - 1);
    case IdentityId::L2_21:
      return (k * x + 2 * (x + 1)) * a(k + 2) - (2 * x * (x + 2) * k + 2 * (2 * x * x + 3 * x + 4)) * a(k + 1) +
             4 * x * x * (2 * k + 3) * a(k) + (x - 1) * (x - 2) * c(k + 1) - 4 * (x - 1) * (x - 2) * c(k);
    case IdentityId::L1_30:
    case IdentityId::L1_30_printed: {
      const long c1 = id == IdentityId::L1_30 ? 4 : 1;
      return 3 * (x - 3) * x * (4 * x - 3) * da - (4 * (2 * x - 3) * k + 2 * (2 * x - 5)) * a(k + 1) +
             (27 * (2 * x - 3) * k + 3 * (4 * x * x - 3 * x - 9)) * a(k) - c1 * (x - 1) * c(k + 1) +
             27 * (x - 1) * c(k);
    }
    case IdentityId::L2_30: {
      const Poly x2 = x * x, x3 = x2 * x, x4 = x3 * x;
      return (4 * (2 * x - 3).pow(2) * (5 * x - 3) * k + 2 * (2 * x - 3) * (5 * x - 3) * (6 * x - 11)) * a(k + 2) -
             (81 * (8 * x3 - 24 * x2 + 27 * x - 9) * k + 18 * (37 * x3 - 123 * x2 + 153 * x - 54)) * a(k + 1) +
             (729 * k * x3 + 486 * x3) * a(k) + 4 * (x - 1) * (2 * x - 3) * (5 * x - 3) * c(k + 2) -
             3 * (40 * x4 - 30 * x3 - 207 * x2 + 270 * x - 81) * c(k + 1) + 162 * x2 * (5 * x2 - 15 * x + 9) * c(k);
    }
    case IdentityId::L1_3k2m:
      return x * (2 * x - 9) * (4 * x + 9) * da - (36 * k + 30) * a(k + 1) +
             (243 * k + 8 * x * x + 18 * x + 81) * a(k) - 12 * c(k + 1) - (8 * x * x - 36 * x - 81) * c(k) +
             27 * x * (2 * x - 9) * c(k - 1);
    case IdentityId::L2_3k2m: {
      const Poly x2 = x * x, x3 = x2 * x;
      return (36 * (2 * x + 3) * k + 66 * (2 * x + 3)) * a(k + 2) -
             ((32 * x3 + 486 * x + 729) * k + 12 * (4 * x3 + 4 * x2 + 54 * x + 81)) * a(k + 1) +
             (216 * k * x3 + 108 * x2 * (2 * x + 3)) * a(k) + 12 * (2 * x + 3) * c(k + 2) +
             (16 * x3 - 72 * x2 - 378 * x - 243) * c(k + 1) + 2 * x * (8 * x3 - 90 * x2 + 243 * x + 729) * c(k) -
             54 * x3 * (2 * x - 9) * c(k - 1);
    }
    case IdentityId::L1_aex:
      return x * (x - 3) * (7 * x - 3) * da - (4 * (x - 1) * k + 14 * (x - 1)) * a(k + 1) +
             (27 * (x - 1) * k + 3 * (x - 1) * (11 * x + 3)) * a(k) - 6 * (x - 1).pow(2) * c(k) +
             6 * x.pow(3) * c(k - 1);
    case IdentityId::L2_aex: {
      const Poly x2 = x * x, x3 = x2 * x, x4 = x3 * x;
      return (4 * (x - 1).pow(2) * (3 * x - 1) * k + 18 * (x - 1).pow(2) * (3 * x - 1)) * a(k + 2) +
             ((-113 * x3 + 189 * x2 - 135 * x + 27) * k - 4 * (30 * x4 - 19 * x3 - 21 * x2 + 39 * x - 9)) * a(k + 1) +
             (216 * k * x3 + 12 * x3 * (7 * x2 - 2 * x + 15)) * a(k) + 6 * (x - 1).pow(3) * (3 * x - 1) * c(k + 1) -
             6 * x2 * (x - 1) * (10 * x2 - 17 * x + 9) * c(k) + 6 * x.pow(5) * (7 * x - 9) * c(k - 1);
    }
  }
  throw std::logic_error("unreachable");
}

IdentityReport check_identity(IdentityId id, long k_max) {
  IdentityReport rep;
  for (long k = 0; k <= k_max; ++k) {
    if (!identity_residual(id, k).is_zero()) {
      rep.ok = false;
      rep.failing.push_back(k);
    }
  }
  return rep;
}

}  // namespace hankel
