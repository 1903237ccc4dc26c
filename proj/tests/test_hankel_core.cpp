#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "hankel/factor.hpp"
#include "hankel/hankel.hpp"
#include "helpers.hpp"

using namespace hankel;
using testing_util::poly;

namespace {
const FamilyId f31 = FamilyId::binom(3, 1);
const FamilyId f21 = FamilyId::binom(2, 1);

PolyMatrix constant_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  PolyMatrix m;
  for (auto r : rows) {
    std::vector<Poly> row;
    for (long v : r) row.emplace_back(v);
    m.push_back(row);
  }
  return m;
}
}  // namespace

TEST_CASE("Hankel matrices") {
  auto m0 = hankel_matrix(f31, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0][0] == Poly(1L));
  auto m1 = hankel_matrix(f31, 1);
  CHECK(m1[0][1] == poly({"4", "1"}));
  CHECK(m1[1][0] == poly({"4", "1"}));
  CHECK(m1[1][1] == poly({"21", "6", "1"}));
  auto m5 = hankel_matrix(f31, 5);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) CHECK(m5[i][j] == m5[j][i]);
  Json j = to_json(m1);
  CHECK(j.dump() == R"([[["1"],["4","1"]],[["4","1"],["21","6","1"]]])");
}

TEST_CASE("determinant examples") {
  CHECK(det_fraction_free(constant_matrix({{1, 2}, {3, 4}})) == Poly(-2L));
  const Poly x = Poly::x();
  CHECK(det_fraction_free({{Poly(1L), x}, {x, x * x}}).is_zero());
  CHECK(det_fraction_free(hankel_matrix(f31, 1)) == poly({"5", "-2"}));
  // zero leading pivot forces a row swap
  CHECK(det_fraction_free(constant_matrix({{0, 1}, {1, 0}})) == Poly(-1L));
  CHECK(det_fraction_free(constant_matrix({{0, 0}, {1, 0}})).is_zero());
  CHECK(det_rational({{Rat(0), Rat(2)}, {Rat(3), Rat(1, 2)}}) == -6);
  CHECK_THROWS_AS(det_fraction_free({{Poly(1L), Poly(2L)}}), std::invalid_argument);
}

TEST_CASE("fraction-free elimination against cofactor expansion on 200 random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> size(1, 5), coin(0, 3);
  for (int t = 0; t < 200; ++t) {
    int s = size(rng);
    PolyMatrix m(s, std::vector<Poly>(s));
    for (auto& row : m)
      for (auto& e : row) e = coin(rng) ? testing_util::random_poly(rng, 3, 9, 4) : Poly();
    if (t % 10 == 0 && s > 1) m[s - 1] = m[0];  // singular on purpose
    Poly oracle = det_cofactor(m);
    CHECK(det_fraction_free(m) == oracle);
    CHECK(det_fraction_free_serial(m) == oracle);
    if (t % 10 == 0 && s > 1) CHECK(oracle.is_zero());
  }
}

TEST_CASE("quartet values") {
  auto q1 = quartet(f31, 1);
  CHECK(q1.H == poly({"5", "-2"}));
  CHECK(q1.K == poly({"36", "-9", "-2"}));
  CHECK(quartet(f21, 1).H == poly({"1", "-2"}));
  auto q0 = quartet(f31, 0);
  CHECK(q0.H == Poly(1L));
  CHECK(q0.K == a_poly(f31, 1));
  CHECK_FALSE(q0.M.has_value());
  CHECK_FALSE(q0.N.has_value());
  CHECK_THROWS_AS(variant_columns(Variant::M, 0), std::invalid_argument);
  CHECK(variant_columns(Variant::M, 3) == std::vector<int>{0, 1, 4, 3});
  CHECK(variant_columns(Variant::N, 3) == std::vector<int>{0, 1, 2, 5});
  CHECK(parse_variant("K") == Variant::K);
  CHECK_THROWS_AS(parse_variant("Q"), std::invalid_argument);
}

// Frozen from an independent Berkowitz (division-free) determinant of the explicit matrices.
TEST_CASE("determinants frozen from an independent oracle") {
  const std::map<std::pair<std::string, int>, Poly> want = {
      {{"3,1", 2}, poly({"74", "-60", "12"})},
      {{"3,1", 3}, poly({"3158", "-3864", "1560", "-208"})},
      {{"3,1", 4}, poly({"386137", "-632092", "384864", "-103360", "10336"})},
      {{"2,1", 2}, poly({"1", "-6", "4"})},
      {{"2,1", 3}, poly({"1", "-12", "20", "-8"})},
      {{"3,0", 2}, poly({"99", "-24", "-1"})},
      {{"3,0", 3}, poly({"4590", "-1242", "-252", "62"})},
      {{"3,2", 2}, poly({"26", "-69", "27"})},
      {{"3,2", 3}, poly({"646", "-3111", "2898", "-702"})},
      {{"3k-2m", 2}, poly({"99", "-72", "12"})},
      {{"3k-2m", 3}, poly({"4590", "-5292", "1872", "-208"})},
      {{"aex", 2}, poly({"170", "78", "-42", "2"})},
      {{"aex", 3}, poly({"7429", "5928", "-3078", "0", "57"})},
      {{"3k+1-shift", 2}, poly({"74", "-26", "-1"})},
      {{"3k+1-shift", 3}, poly({"3158", "-1560", "-66", "62"})},
      {{"2k+2-shift", 2}, poly({"-1", "2", "4"})},
      {{"2k+2-shift", 3}, poly({"1", "4", "-4", "-8"})},
  };
  for (const auto& [key, value] : want) {
    CAPTURE(key.first);
    CAPTURE(key.second);
    CHECK(hankel_det(FamilyId::parse(key.first), key.second) == value);
  }
  auto q2 = quartet(f31, 2);
  CHECK(q2.K == poly({"780", "-552", "64", "12"}));
  CHECK(*q2.M == poly({"-2138", "1052", "178", "-100"}));
  CHECK(*q2.N == poly({"6297", "-4092", "316", "88", "12"}));
}

TEST_CASE("point evaluation matches the symbolic determinant") {
  for (const auto& f : named_families())
    for (int n = 0; n <= 6; ++n)
      for (Rat x : {Rat(0), Rat(1), Rat(3, 7), Rat(-5, 2)})
        for (Variant v : {Variant::H, Variant::K}) CHECK(hankel_det_at(f, n, x, v) == hankel_det(f, n, v).eval(x));
}

TEST_CASE("Dodgson identity") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(dodgson_check(f31, n));
    CHECK(dodgson_check(f21, n));
  }
  CHECK(dodgson_check(FamilyId::binom(3, 2), 3));
  for (const auto& f : core_families())
    for (int n = 1; n <= 6; ++n) CHECK(dodgson_check(f, n));
  CHECK_THROWS_AS(dodgson_check(f31, 0), std::invalid_argument);
}

TEST_CASE("exact degree for (3,1) and (2,1)") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(hankel_det(f31, n).degree() == n);
    CHECK(hankel_det(f21, n).degree() == n);
  }
}

TEST_CASE("degree instances") {
  DegreeInstance hank;
  for (int i = 0; i <= 4; ++i) {
    hank.p.push_back(i);
    hank.q.push_back(i);
    hank.alphas.push_back(Rat(3 * i + 1));
    hank.betas.push_back(Rat(3 * i));
  }
  hank.gamma = -1;
  CHECK(degree_bound(hank) == 4);
  CHECK(general_degree_det(hank) == hankel_det(f31, 4));

  DegreeInstance single{{2}, {2}, {Rat(1, 2)}, {Rat(3)}, Rat(2)};
  CHECK(degree_bound(single) == 4);
  CHECK(general_degree_det(single).degree() <= 4);

  DegreeInstance bad{{1, 2}, {1}, {Rat(0)}, {Rat(0)}, Rat(0)};
  CHECK_THROWS_AS(degree_matrix(bad), std::invalid_argument);
}

TEST_CASE("50 random degree instances respect the bound") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> size(0, 3), pq(-1, 4);
  for (int t = 0; t < 50; ++t) {
    DegreeInstance inst;
    int n = size(rng);
    for (int i = 0; i <= n; ++i) {
      inst.p.push_back(pq(rng));
      inst.q.push_back(pq(rng));
      inst.alphas.push_back(testing_util::random_rat(rng, 12, 3));
      inst.betas.push_back(testing_util::random_rat(rng, 12, 3));
    }
    inst.gamma = testing_util::random_rat(rng, 4, 2);
    Poly d = general_degree_det(inst);
    CHECK(d == det_cofactor(degree_matrix(inst)));
    if (!d.is_zero()) CHECK(d.degree() <= degree_bound(inst));
  }
}

TEST_CASE("golden factorizations at n = 10") {
  Rat v = hankel_det_at(f31, 10, Rat(0));
  REQUIRE(is_integer(v));
  auto rep = factor_smooth(v.get_num());
  CHECK(render(rep) == "2^2·7^2·37·41^2·43^3·47^2·53 · 41740796329");
  CHECK(rep.cofactor == Int("41740796329"));
  CHECK(rep.cofactor_kind == Primality::prime);
  Rat w = hankel_det_at(f31, 10, Rat(1));
  CHECK(w == hankel_det_at(FamilyId::binom(3, 2), 10, Rat(0)));
  CHECK(render(factor_smooth(w.get_num())) == "2^2·3·7^3·37·41^2·43^3·47^3·53^2·59·61");
}
