#include "hankel/family.hpp"

#include <stdexcept>
#include <tuple>

#include "hankel/combinat.hpp"
#include "hankel/memo.hpp"

namespace hankel {

FamilyId FamilyId::binom(int beta, int alpha) {
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  return {FamilyKind::BinomBA, beta, alpha};
}

FamilyId FamilyId::parse(std::string_view s) {
  if (s == "3k-2m") return three_k_minus_2m();
  if (s == "aex") return aex();
  if (s == "3k+1-shift") return shift_3k1();
  if (s == "2k+2-shift") return shift_2k2();
  auto comma = s.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("unknown family: " + std::string(s));
  try {
    size_t used = 0;
    std::string b(s.substr(0, comma)), a(s.substr(comma + 1));
    int beta = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    int alpha = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    return binom(beta, alpha);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("unknown family: " + std::string(s));
  }
}

std::string FamilyId::name() const {
  switch (kind) {
    case FamilyKind::BinomBA: return std::to_string(beta) + "," + std::to_string(alpha);
    case FamilyKind::ThreeKMinus2M: return "3k-2m";
    case FamilyKind::Aex: return "aex";
    case FamilyKind::ShiftThreeKPlus1: return "3k+1-shift";
    case FamilyKind::ShiftTwoKPlus2: return "2k+2-shift";
  }
  return "?";
}

std::vector<FamilyId> named_families() {
  return {FamilyId::binom(3, 1), FamilyId::binom(2, 1), FamilyId::binom(3, 0), FamilyId::binom(3, 2),
          FamilyId::three_k_minus_2m(), FamilyId::aex(), FamilyId::shift_3k1(), FamilyId::shift_2k2()};
}

std::vector<FamilyId> core_families() {
  return {FamilyId::binom(3, 1), FamilyId::binom(2, 1), FamilyId::binom(3, 0), FamilyId::three_k_minus_2m(),
          FamilyId::aex()};
}

Poly a_poly_direct(const FamilyId& f, long k) {
  if (k < 0) throw std::invalid_argument("a_k needs k >= 0");
  std::vector<Rat> c(static_cast<size_t>(k) + 1);
  for (long m = 0; m <= k; ++m) {
    switch (f.kind) {
      case FamilyKind::BinomBA: c[m] = binom(f.beta * k + f.alpha - m, k - m); break;
      case FamilyKind::ThreeKMinus2M: c[m] = binom(3 * k - 2 * m, k - m); break;
      case FamilyKind::Aex: c[m] = binom(3 * k - m, k - m) * ((m + 1) * (m + 2)) / (k + 1); break;
      case FamilyKind::ShiftThreeKPlus1: c[m] = binom(3 * k + 1, k - m); break;
      case FamilyKind::ShiftTwoKPlus2: c[m] = binom(2 * k + 2, k - m); break;
    }
  }
  return Poly(std::move(c));
}

namespace {
using Key = std::tuple<FamilyId, long>;
MemoTable<Key, Poly>& a_table() {
  static MemoTable<Key, Poly> t;
  return t;
}
MemoTable<Key, Poly>& c_table() {
  static MemoTable<Key, Poly> t;
  return t;
}
}  // namespace

const Poly& a_poly(const FamilyId& f, long k) {
  if (k < 0) throw std::invalid_argument("a_k needs k >= 0");
  return a_table().get_or_make({f, k}, [&] { return a_poly_direct(f, k); });
}

const Poly& conv_poly(const FamilyId& f, long k) {
  if (k < -1) throw std::invalid_argument("c_k needs k >= -1");
  return c_table().get_or_make({f, k}, [&] {
    Poly s;
    for (long m = 0; m <= k; ++m) s += a_poly(f, m) * a_poly(f, k - m);
    return s;
  });
}

}  // namespace hankel
