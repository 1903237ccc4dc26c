#include <doctest.h>
#include <omp.h>

#include <stdexcept>

#include "hankel/combinat.hpp"
#include "hankel/family.hpp"
#include "hankel/gf.hpp"
#include "helpers.hpp"

using namespace hankel;
using testing_util::poly;

namespace {
const FamilyId f31 = FamilyId::binom(3, 1);
const FamilyId f21 = FamilyId::binom(2, 1);
}  // namespace

TEST_CASE("a_k examples") {
  CHECK(a_poly(f31, 0) == Poly(1L));
  CHECK(a_poly(f31, 1) == poly({"4", "1"}));
  CHECK(a_poly(f21, 1) == poly({"3", "1"}));
  CHECK(a_poly(f21, 2) == poly({"10", "4", "1"}));
  CHECK(a_poly(f31, 2) == poly({"21", "6", "1"}));
  CHECK(a_poly(FamilyId::aex(), 0) == Poly(2L));
  // (3k choose k) x^0 ... with weights (m+1)(m+2)/(k+1): k = 1 gives (6 + 6x)/2
  CHECK(a_poly(FamilyId::aex(), 1) == poly({"3", "3"}));
  CHECK_THROWS_AS(a_poly(f31, -1), std::invalid_argument);
}

TEST_CASE("convolutions") {
  CHECK(conv_poly(f31, -1).is_zero());
  CHECK(conv_poly(f31, 0) == Poly(1L));
  CHECK(conv_poly(f31, 1) == poly({"8", "2"}));
  CHECK_THROWS_AS(conv_poly(f31, -2), std::invalid_argument);
  for (const auto& f : core_families())
    for (long k = 0; k <= 12; ++k) {
      Poly rev;
      for (long m = k; m >= 0; --m) rev += a_poly(f, k - m) * a_poly(f, m);
      CHECK(conv_poly(f, k) == rev);
    }
}

TEST_CASE("BinomBA sequences are monic of degree k with the binomial constant term") {
  for (int beta = 1; beta <= 4; ++beta)
    for (int alpha = -1; alpha <= 4; ++alpha) {
      const FamilyId f = FamilyId::binom(beta, alpha);
      for (long k = 0; k <= 25; ++k) {
        const Poly& a = a_poly(f, k);
        CHECK(a.degree() == k);
        CHECK(a.lead() == 1);
        CHECK(a.eval(Rat(0)) == binom(beta * k + alpha, k));
      }
    }
}

TEST_CASE("shift identities") {
  for (long k = 0; k <= 25; ++k) {
    CHECK(a_poly(FamilyId::shift_2k2(), k) == a_poly(f21, k).compose_affine(Rat(1), Rat(1)));
    CHECK(a_poly(FamilyId::shift_3k1(), k) == a_poly(FamilyId::binom(3, 0), k).compose_affine(Rat(1), Rat(1)));
  }
}

TEST_CASE("memoized and direct sequences agree, also when filled concurrently") {
  const auto fams = named_families();
  const int kmax = 30;
  std::vector<int> bad(fams.size() * (kmax + 1), 0);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(bad.size()); ++i) {
    const auto& f = fams[i / (kmax + 1)];
    long k = kmax - i % (kmax + 1);
    bad[i] = !(a_poly(f, k) == a_poly_direct(f, k));
  }
  for (int b : bad) CHECK(b == 0);
}

TEST_CASE("family names") {
  for (const auto& f : named_families()) CHECK(FamilyId::parse(f.name()) == f);
  CHECK(FamilyId::parse("3,2") == FamilyId::binom(3, 2));
  CHECK(FamilyId::parse("4,-1") == FamilyId::binom(4, -1));
  CHECK_THROWS_AS(FamilyId::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyId::parse("banana"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyId::parse("3,x"), std::invalid_argument);
  CHECK(named_families().size() == 8);
}

TEST_CASE("t and tau series") {
  auto t3 = t_series(3, 3);
  CHECK(t3[0] == Poly(1L));
  CHECK(t3[1] == Poly(1L));
  CHECK(t3[2] == Poly(3L));
  CHECK(t3[3] == Poly(12L));
  auto t2 = t_series(2, 3);
  CHECK(t2[2] == Poly(2L));
  CHECK(t2[3] == Poly(5L));
  for (int beta = 1; beta <= 4; ++beta) {
    const int order = 15;
    auto t = t_series(beta, order);
    auto residual = t - SeriesYX::constant(order, Poly(1L)) - t.pow(beta).shift(1);
    for (int k = 0; k <= order; ++k) CHECK(residual[k].is_zero());
  }
  auto tau = tau_series(2);
  CHECK(tau[0] == Poly(1L));
  CHECK(tau[1] == Poly(Rat(3, 2)));
  CHECK(tau[2] == Poly(5L));
}

TEST_CASE("generating-function forms") {
  CHECK(f_series(GfForm::Direct, f31, 4)[0] == Poly(1L));
  CHECK(f_series(GfForm::Closed31, f31, 4)[1] == poly({"4", "1"}));
  CHECK(f_series(GfForm::Closed21, f21, 4)[2] == poly({"10", "4", "1"}));
  CHECK(gf_form_equiv(GfForm::Direct, GfForm::Closed31, f31, 20).equal);
  CHECK(gf_form_equiv(GfForm::Direct, GfForm::Closed21, f21, 20).equal);
  CHECK(gf_form_equiv(GfForm::Direct, GfForm::Direct, FamilyId::binom(4, 2), 10).equal);
  CHECK_THROWS_AS(f_series(GfForm::Closed31, f21, 3), std::invalid_argument);
  CHECK_FALSE(compatible(GfForm::ClosedAex, f31));
  for (auto form : {GfForm::Direct, GfForm::Closed31, GfForm::Closed21, GfForm::Closed30, GfForm::Closed3k2m,
                    GfForm::ClosedAex})
    CHECK(parse_gf_form(to_string(form)) == form);
}

TEST_CASE("direct forms of every named family reproduce a_k") {
  for (const auto& f : named_families()) {
    auto s = f_series(GfForm::Direct, f, 12);
    for (int k = 0; k <= 12; ++k) CHECK(s[k] == a_poly(f, k));
  }
  for (int beta = 1; beta <= 4; ++beta)
    for (int alpha = -1; alpha <= 3; ++alpha) {
      const FamilyId f = FamilyId::binom(beta, alpha);
      auto s = f_series(GfForm::Direct, f, 10);
      for (int k = 0; k <= 10; ++k) CHECK(s[k] == a_poly(f, k));
    }
}
