#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hankel/combinat.hpp"
#include "hankel/factor.hpp"
#include "hankel/poly.hpp"
#include "hankel/serialize.hpp"
#include "hankel/series.hpp"
#include "hankel/sturm.hpp"
#include "helpers.hpp"

using namespace hankel;
using testing_util::poly;
using testing_util::rat;

TEST_CASE("rationals stay canonical and refuse zero denominators") {
  CHECK(make_rat(2, 4) == Rat(1, 2));
  CHECK(make_rat(3, -6).get_den() == 2);
  CHECK(make_rat(3, -6).get_num() == -1);
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(rat_div(Rat(1), Rat(0)), std::domain_error);
  CHECK(to_string(make_rat(-6, 4)) == "-3/2");
  CHECK(to_string(Rat(7)) == "7");
  CHECK(parse_rat("-3/2") == Rat(-3, 2));
  CHECK(parse_rat("10/4") == Rat(5, 2));
  CHECK_THROWS_AS(parse_rat("3/x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::domain_error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat a = testing_util::random_rat(rng, 1000, 97), b = testing_util::random_rat(rng, 1000, 97);
    for (Rat r : {Rat(a + b), Rat(a - b), Rat(a * b)}) {
      CHECK(gcd(r.get_num(), r.get_den()) == 1);
      CHECK(r.get_den() > 0);
      CHECK(parse_rat(to_string(r)) == r);
    }
    if (b != 0) CHECK(rat_div(a, b) * b == a);
  }
}

TEST_CASE("generalized binomial by falling factorial") {
  CHECK(binom(4, 1) == 4);
  CHECK(binom(7, 2) == 21);
  CHECK(binom(Rat(1, 2), 2) == Rat(-1, 8));
  CHECK(binom(Rat(-7, 3), 0) == 1);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 3) == -1);  // (-1)(-2)(-3)/6
  for (long n = 0; n <= 30; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binom(n, k) == Rat(binom_classic(n, k)));
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(8) == 384);
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("polynomial examples") {
  const Poly h1 = poly({"5", "-2"});
  CHECK(h1.derivative() == Poly(-2L));
  CHECK(h1.eval(Rat(3)) == -1);
  CHECK(poly({"4", "1"}) * poly({"21", "6", "1"}) == poly({"84", "45", "10", "1"}));
  CHECK(to_string(h1) == "5 - 2x");
  CHECK(to_string(poly({"84", "45", "10", "1"})) == "84 + 45x + 10x^2 + x^3");
  CHECK(to_string(poly({"0", "3/2"})) == "(3/2)x");
  CHECK(to_string(Poly()) == "0");
  CHECK(Poly().degree() == Poly::kMinusInfinity);
  CHECK(poly({"1", "2", "0"}).degree() == 1);  // trailing zero trimmed
  CHECK(Poly::x().pow(3) == Poly::monomial(Rat(1), 3));
}

TEST_CASE("random polynomial ring laws") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    Poly p = testing_util::random_poly(rng, 12), q = testing_util::random_poly(rng, 12);
    Rat c = testing_util::random_rat(rng), pt = testing_util::random_rat(rng);
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK((p + c * q).derivative() == p.derivative() + c * q.derivative());
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    CHECK(p.compose_affine(Rat(2), Rat(-1, 3)).eval(pt) == p.eval(2 * pt - Rat(1, 3)));
    if (!q.is_zero()) {
      auto [quo, rem] = divmod(p, q);
      CHECK(quo * q + rem == p);
      CHECK(rem.degree() < q.degree());
      CHECK(exact_div(p * q, q) == p);
    }
  }
  CHECK_THROWS_AS(exact_div(poly({"1", "1"}), poly({"0", "1"})), std::logic_error);
  CHECK_THROWS_AS(divmod(Poly::x(), Poly()), std::domain_error);
  CHECK(gcd(poly({"-1", "0", "1"}), poly({"2", "2"})) == poly({"1", "1"}));
}

TEST_CASE("series products agree with coefficient convolution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 6;
    std::vector<Poly> a(order + 1), b(order + 1);
    for (int k = 0; k <= order; ++k) {
      a[k] = testing_util::random_poly(rng, 3);
      b[k] = testing_util::random_poly(rng, 3);
    }
    SeriesYX sa(order, a), sb(order, b);
    SeriesYX prod = sa * sb;
    for (int k = 0; k <= order; ++k) {
      Poly want;
      for (int j = 0; j <= k; ++j) want += a[j] * b[k - j];
      CHECK(prod[k] == want);
    }
    // truncation: coefficient k only sees 0..k, so shortening both inputs changes nothing below
    SeriesYX short_prod = SeriesYX(3, a) * SeriesYX(3, b);
    for (int k = 0; k <= 3; ++k) CHECK(short_prod[k] == prod[k]);
  }
  SeriesYX one_minus_y(5, {Poly(1L), Poly(-1L)});
  SeriesYX geo = one_minus_y.inverse();
  for (int k = 0; k <= 5; ++k) CHECK(geo[k] == Poly(1L));
  CHECK(one_minus_y.pow(-2)[3] == Poly(4L));
  // x + xy divided by x leaves 1 + y; dividing 1 by x is refused
  SeriesYX num(3, {Poly::x(), Poly::x()}), den(3, {Poly::x()});
  auto q = SeriesYX::solve(num, den);
  CHECK(q[0] == Poly(1L));
  CHECK(q[1] == Poly(1L));
  CHECK_THROWS_AS(SeriesYX::solve(SeriesYX::constant(3, Poly(1L)), den), std::logic_error);
}

TEST_CASE("trial-division factorization") {
  auto r = factor_smooth(Int(12), 100);
  REQUIRE(r.small_factors.size() == 2);
  CHECK(r.small_factors[0] == std::make_pair(Int(2), 2u));
  CHECK(r.small_factors[1] == std::make_pair(Int(3), 1u));
  CHECK(r.cofactor == 1);
  CHECK(render(r) == "2^2·3");

  auto one = factor_smooth(Int(1), 100);
  CHECK(one.small_factors.empty());
  CHECK(one.cofactor == 1);
  CHECK(render(one) == "1");
  CHECK(render(factor_smooth(Int(-1), 100)) == "-1");
  CHECK_THROWS_AS(factor_smooth(Int(0), 100), std::domain_error);
  CHECK_THROWS_AS(factor_smooth(Int(10), 1), std::invalid_argument);

  auto big = factor_smooth(Int("41740796329") * 36, 1000);
  CHECK(render(big) == "2^2·3^2 · 41740796329");
  CHECK(big.cofactor_kind == Primality::prime);
}

TEST_CASE("500 random factorizations reconstruct their input") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned long long> dist(1, 1000000000000000000ULL);
  const unsigned long bound = 2000;
  for (int i = 0; i < 500; ++i) {
    Int n(std::to_string(dist(rng)));
    if (i % 2) n = -n;
    auto rep = factor_smooth(n, bound);
    Int back = rep.cofactor * rep.sign;
    Int last = 1;
    for (auto& [p, e] : rep.small_factors) {
      CHECK(p > last);
      CHECK(p <= bound);
      CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      back *= pe;
      last = p;
    }
    CHECK(back == n);
    for (unsigned long d = 2; d <= bound; ++d) {
      if (rep.cofactor < d) break;
      if (mpz_divisible_ui_p(rep.cofactor.get_mpz_t(), d)) {
        FAIL("cofactor divisible by ", d);
        break;
      }
    }
  }
}

TEST_CASE("200 random cofactor primality tags agree with gmp") {
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(17);
  for (int i = 0; i < 200; ++i) {
    Int n = gr.get_z_bits(20 + (i % 70)) + 2;
    Primality got = classify(n);
    bool oracle = mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    CHECK((got == Primality::prime || got == Primality::probable_prime) == oracle);
    if (n < Int("3317044064679887385961981")) CHECK(got != Primality::probable_prime);
  }
  CHECK(classify(Int(1)) == Primality::unit);
  // 2^127 - 1 is prime but above the proven range
  CHECK(classify(Int("170141183460469231731687303715884105727")) == Primality::probable_prime);
}

TEST_CASE("Sturm counts and root isolation") {
  CHECK(sturm_count(poly({"-2", "0", "1"}), Rat(0), Rat(2)) == 1);
  CHECK(isolate_real_roots(poly({"1", "0", "1"})).empty());
  auto iv = isolate_real_roots(poly({"5", "-2"}));
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].first < Rat(5, 2));
  CHECK(Rat(5, 2) <= iv[0].second);
  CHECK_THROWS_AS(sturm_count(Poly(), Rat(0), Rat(1)), std::domain_error);
  CHECK_THROWS_AS(isolate_real_roots(Poly()), std::domain_error);
  // repeated roots count once
  CHECK(sturm_count(poly({"1", "-2", "1"}) * poly({"-3", "1"}), Rat(-10), Rat(10)) == 2);
}

TEST_CASE("100 random squarefree polynomials: Sturm count equals isolated intervals") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> nroots(0, 6), quad(0, 1);
  for (int t = 0; t < 100; ++t) {
    // distinct rational roots plus an optional x^2 + c factor with no real roots
    std::vector<Rat> roots;
    int k = nroots(rng);
    while (static_cast<int>(roots.size()) < k) {
      Rat r = testing_util::random_rat(rng, 30, 5);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Poly p(Rat(7, 2));
    for (const Rat& r : roots) p *= Poly::x() - Poly(r);
    if (quad(rng) || roots.empty()) p *= poly({"2", "0", "1"});
    Rat b = cauchy_bound(p);
    auto iv = isolate_real_roots(p);
    CHECK(static_cast<int>(iv.size()) == sturm_count(p, -b, b));
    CHECK(static_cast<int>(iv.size()) == k);
    std::sort(roots.begin(), roots.end());
    for (size_t i = 0; i < iv.size(); ++i) {
      CHECK(iv[i].first < roots[i]);
      CHECK(roots[i] <= iv[i].second);
      if (i) CHECK(iv[i - 1].second <= iv[i].first);
    }
  }
}

TEST_CASE("JSON round-trip of Rat, Poly and series") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Poly p = testing_util::random_poly(rng, 8, 1000, 50);
    Json j = to_json(p);
    CHECK(poly_from_json(Json::parse(j.dump())) == p);
    Rat r = testing_util::random_rat(rng, 1000, 50);
    CHECK(rat_from_json(Json::parse(to_json(r).dump())) == r);
  }
  CHECK(to_json(poly({"5", "-2"})).dump() == R"(["5","-2"])");
  CHECK(to_json(Rat(-3, 2)).dump() == R"("-3/2")");
  SeriesYX s(2, {poly({"1"}), poly({"4", "1"}), poly({"1/2", "0", "3"})});
  Json js = to_json(s);
  CHECK(js["order"] == 2);
  CHECK(series_from_json(Json::parse(js.dump())) == s);
}
