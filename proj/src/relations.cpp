#include <stdexcept>

#include "hankel/identity_lab.hpp"

namespace hankel {

std::vector<RelationId> all_relations() {
  using R = RelationId;
  return {R::R_det01,     R::R_linear,    R::R_intermediate, R::R_secondder,   R::R_rhs,      R::R_x3,
          R::R_x3half,    R::R_x3quarter, R::R_Crec,         R::R_21_first,    R::R_21_second, R::R_21_factored,
          R::R_21_third,  R::R_21_x0,     R::R_21_x2};
}

std::string to_string(RelationId id) {
  switch (id) {
    case RelationId::R_det01: return "R_det01";
    case RelationId::R_linear: return "R_linear";
    case RelationId::R_intermediate: return "R_intermediate";
    case RelationId::R_secondder: return "R_secondder";
    case RelationId::R_rhs: return "R_rhs";
    case RelationId::R_x3: return "R_x3";
    case RelationId::R_x3half: return "R_x3half";
    case RelationId::R_x3quarter: return "R_x3quarter";
    case RelationId::R_Crec: return "R_Crec";
    case RelationId::R_21_first: return "R_21_first";
    case RelationId::R_21_first_printed: return "R_21_first-printed";
    case RelationId::R_21_second: return "R_21_second";
    case RelationId::R_21_factored: return "R_21_factored";
    case RelationId::R_21_third: return "R_21_third";
    case RelationId::R_21_x0: return "R_21_x0";
    case RelationId::R_21_x2: return "R_21_x2";
  }
  return "?";
}

RelationId parse_relation(const std::string& s) {
  for (auto id : all_relations())
    if (to_string(id) == s) return id;
  if (s == to_string(RelationId::R_21_first_printed)) return RelationId::R_21_first_printed;
  throw std::invalid_argument("unknown relation: " + s);
}

FamilyId relation_family(RelationId id) {
  switch (id) {
    case RelationId::R_21_first:
    case RelationId::R_21_first_printed:
    case RelationId::R_21_second:
    case RelationId::R_21_factored:
    case RelationId::R_21_third:
    case RelationId::R_21_x0:
    case RelationId::R_21_x2: return FamilyId::binom(2, 1);
    default: return FamilyId::binom(3, 1);
  }
}

namespace {

struct Q {
  Poly h, k, m, nn;
};

Q quartet_of(const FamilyId& f, long n) {
  auto q = quartet(f, static_cast<int>(n));
  return {q.H, q.K, *q.M, *q.N};
}

Rat ratio(long p, long q) { return make_rat(p, q); }

std::vector<Poly> pointwise(const std::vector<Rat>& v) {
  std::vector<Poly> out;
  for (const auto& r : v) out.emplace_back(r);
  return out;
}

// K, N, M at a point, plus the neighbour relation H_{n-1} H_{n+1} = ratio H_n^2 when given.
struct PointRel {
  Rat pt;
  Rat k_ratio, n_ratio, m_ratio;
  bool with_neighbours;
  Rat nb_ratio;
};

std::vector<Poly> point_relation(const FamilyId& f, long n, const PointRel& r) {
  const Rat h = hankel_det(f, n).eval(r.pt);
  const Rat k = hankel_det(f, n, Variant::K).eval(r.pt);
  const Rat m = hankel_det(f, n, Variant::M).eval(r.pt);
  const Rat nn = hankel_det(f, n, Variant::N).eval(r.pt);
  std::vector<Rat> out{k - r.k_ratio * h, nn - r.n_ratio * h, m - r.m_ratio * h};
  if (r.with_neighbours) {
    Rat lhs = hankel_det(f, n - 1).eval(r.pt) * hankel_det(f, n + 1).eval(r.pt);
    out.push_back(lhs - r.nb_ratio * h * h);
  }
  return pointwise(out);
}

}  // namespace

std::vector<Poly> relation_residuals(RelationId id, int n_) {
  if (n_ < 1) throw std::invalid_argument("relations need n >= 1");
  const long n = n_;
  const FamilyId f = relation_family(id);
  const Poly x = Poly::x();
  const Poly g = (x - 3) * (2 * x - 3) * (4 * x - 3);
  switch (id) {
    case RelationId::R_det01: {
      auto [h, k, m, nn] = quartet_of(f, n);
      return {g * h.derivative() - ((8 * n * x * x - 6 * (5 * n + 1) * x - 3 * (9 * n * n + 13 * n + 8)) * h +
                                    2 * (4 * n + 3) * k)};
    }
    case RelationId::R_linear: {
      auto [h, k, m, nn] = quartet_of(f, n);
      const long n2 = n * n;
      return {4 * (4 * n + 5) * (x - 1) * nn + 4 * (4 * n + 1) * (x - 1) * m +
              (-16 * (4 * n + 1) * x.pow(3) + 8 * (36 * n + 7) * x * x - 108 * (5 * n + 2) * x + 6 * (54 * n + 31)) * k +
              ((64 * n + 16) * x.pow(4) + (216 * n2 - 24 * n - 12) * x.pow(3) - (972 * n2 + 800 * n + 108) * x * x +
               (1458 * n2 + 1770 * n + 378) * x - 729 * n2 - 1083 * n - 324) *
                  h};
    }
    case RelationId::R_intermediate: {
      auto [h, k, m, nn] = quartet_of(f, n);
      return {g * g * h.derivative(2) -
              g * (8 * (n - 3) * x * x - 6 * (5 * n - 13) * x - 3 * (9 * n * n + 13 * n + 29)) * h.derivative() -
              2 * (64 * n * x.pow(4) - 424 * n * x.pow(3) + 2 * (475 * n - 6) * x * x - 3 * (283 * n - 15) * x +
                   3 * (91 * n - 6)) *
                  h -
              2 * (4 * n + 3) * (8 * n * x * x - 6 * (5 * n + 1) * x - 3 * (9 * n * n + 13 * n + 17)) * k +
              4 * (4 * n + 1) * (4 * n + 3) * m - 4 * (4 * n + 3) * (4 * n + 5) * nn};
    }
    case RelationId::R_secondder: {
      auto [h, k, m, nn] = quartet_of(f, n);
      const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
      Poly hc = 64 * n * (n - 1) * x.pow(5) - 96 * (3 * n2 - 8 * n - 2) * x.pow(4) +
                12 * (36 * n3 + 163 * n2 - 65 * n - 8) * x.pow(3) - 4 * (459 * n3 + 1661 * n2 + 949 * n + 417) * x * x +
                3 * (243 * n4 + 2106 * n3 + 5192 * n2 + 4291 * n + 1482) * x -
                3 * (243 * n4 + 1674 * n3 + 3679 * n2 + 3140 * n + 1008);
      Poly kc = 16 * (n + 2) * x.pow(3) - 4 * (17 * n + 31) * x * x + 6 * (9 * n2 + 48 * n + 53) * x -
                3 * (18 * n2 + 80 * n + 77);
      return {4 * (4 * n + 1) * (x - 1) * g * g * h.derivative(2) - 4 * (4 * n + 1) * hc * h +
              8 * (4 * n + 1) * (4 * n + 3) * kc * k - 32 * (4 * n + 1) * (4 * n + 3) * (4 * n + 5) * (x - 1) * nn};
    }
    case RelationId::R_rhs: {
      auto [h, k, m, nn] = quartet_of(f, n);
      auto w = pqr(f, n);
      Poly zero1 = w[0] * nn + w[1] * k + w[2] * h;
      Poly lhs = (x - 3) * (2 * x - 3).pow(2) * (4 * x - 3).pow(2) *
                 ((x - 1) * (x - 3) * h.derivative(2) + (2 * (n + 2) * (x - 3) + 3) * h.derivative() -
                  3 * n * (n + 1) * h);
      return {zero1, lhs + zero1};
    }
    case RelationId::R_x3: {
      const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
      auto out = point_relation(f, n,
                                {Rat(3), ratio(3 * (9 * n2 + 19 * n + 14), 2 * (4 * n + 3)),
                                 ratio(3 * (243 * n4 + 1512 * n3 + 3605 * n2 + 4144 * n + 1920), 8 * (4 * n + 3) * (4 * n + 5)),
                                 ratio(-3 * n * (243 * n3 + 540 * n2 + 559 * n + 58), 8 * (4 * n + 1) * (4 * n + 3)), false,
                                 Rat(0)});
      const Rat h = hankel_det(f, n).eval(Rat(3)), k = hankel_det(f, n, Variant::K).eval(Rat(3));
      out.emplace_back(Rat(2 * (4 * n + 3) * k - 3 * (9 * n2 + 19 * n + 14) * h));
      return out;
    }
    case RelationId::R_x3half: {
      const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
      return point_relation(
          f, n,
          {Rat(3, 2), ratio(3 * (9 * n2 + 22 * n + 11), 2 * (4 * n + 3)),
           ratio(3 * (243 * n4 + 1674 * n3 + 4031 * n2 + 3934 * n + 1290), 8 * (4 * n + 3) * (4 * n + 5)),
           ratio(-3 * n * (243 * n3 + 702 * n2 + 547 * n + 118), 8 * (4 * n + 1) * (4 * n + 3)), true,
           ratio(9 * (3 * n + 2) * (3 * n + 4) * (6 * n + 1) * (6 * n + 5),
                 4 * (4 * n + 1) * (4 * n + 3) * (4 * n + 3) * (4 * n + 5))});
    }
    case RelationId::R_x3quarter: {
      const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
      return point_relation(
          f, n,
          {Rat(3, 4), ratio(3 * (18 * n2 + 38 * n + 19), 4 * (4 * n + 3)),
           ratio(3 * (486 * n4 + 3024 * n3 + 6724 * n2 + 6290 * n + 2085), 16 * (4 * n + 3) * (4 * n + 5)),
           ratio(-3 * n * (243 * n3 + 540 * n2 + 316 * n + 31), 8 * (4 * n + 1) * (4 * n + 3)), true,
           ratio(9 * (3 * n + 1) * (3 * n + 2) * (6 * n + 5) * (6 * n + 7),
                 4 * (4 * n + 1) * (4 * n + 3) * (4 * n + 3) * (4 * n + 5))});
    }
    case RelationId::R_Crec: {
      const Rat h = hankel_det(f, n).eval(Rat(3));
      const Rat lhs = hankel_det(f, n - 1).eval(Rat(3)) * hankel_det(f, n + 1).eval(Rat(3));
      const Rat r = ratio(9 * (3 * n + 4) * (3 * n + 5) * (6 * n - 1) * (6 * n + 1),
                          4 * (4 * n + 1) * (4 * n + 3) * (4 * n + 3) * (4 * n + 5));
      return {Poly(Rat(lhs - r * h * h))};
    }
    case RelationId::R_21_first:
    case RelationId::R_21_first_printed: {
      auto [h, k, m, nn] = quartet_of(f, n);
      // the printed second line carries (12n+10)x where (10n+12)x holds
      const Poly lin = id == RelationId::R_21_first ? (10 * n + 12) * x : (12 * n + 10) * x;
      return {2 * x * (x - 2) * h.derivative() + (x + 3 + 8 * n + 4 * n * n) * h - (2 * n + 1) * k,
              (2 * n * x.pow(3) + (8 * n * n + 12 * n + 8) * x * x + lin - 4 * n - 8) * h -
                  ((2 + 4 * n) * x * x + (12 + 8 * n) * x + 4) * k + 2 * (n * x + 1) * m +
                  2 * ((n + 1) * x + 1) * nn};
    }
    case RelationId::R_21_second: {
      auto [h, k, m, nn] = quartet_of(f, n);
      const long n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
      return {2 * (x - 2).pow(2) * x * x * (1 + n * x) * h.derivative(2) +
              2 * (x - 2) * x *
                  (3 + 10 * n + 4 * n2 + 3 * x + 9 * n * x + 12 * n2 * x + 4 * n3 * x + 4 * n * x * x + 2 * n2 * x * x) *
                  h.derivative() +
              (10 + 49 * n + 78 * n2 + 44 * n3 + 8 * n4 + (4 + 34 * n + 86 * n2 + 98 * n3 + 48 * n4 + 8 * n5) * x +
               (1 + 8 * n + 14 * n2 + 8 * n3) * x * x + (2 * n - 2 * n3) * x.pow(3)) *
                  h -
              (2 * n + 1) * (1 + 2 * n + 2 * n * x + 2 * n2 * x) * nn};
    }
    case RelationId::R_21_third: {
      auto [h, k, m, nn] = quartet_of(f, n);
      return {nn - (4 + 2 * n + x) * k + (2 + 5 * n + 2 * n * n + 3 * x + 2 * n * x) * h};
    }
    case RelationId::R_21_factored: {
      auto [h, k, m, nn] = quartet_of(f, n);
      return {2 * (x - 2) * x * (n * x + 1) * (x * (x - 2) * h.derivative(2) + (2 * x - 1) * h.derivative() - n * (n + 1) * h) -
              (2 * n + 1) * (1 + 2 * n + 2 * n * x + 2 * n * n * x) *
                  (nn - (4 + 2 * n + x) * k + (2 + 5 * n + 2 * n * n + 3 * x + 2 * n * x) * h)};
    }
    case RelationId::R_21_x0: {
      const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
      return point_relation(f, n,
                            {Rat(0), ratio(3 + 8 * n + 4 * n2, 2 * n + 1),
                             ratio(10 + 49 * n + 78 * n2 + 44 * n3 + 8 * n4, (2 * n + 1) * (2 * n + 1)),
                             Rat(-(3 * n + 2 * n2)), false, Rat(0)});
    }
    case RelationId::R_21_x2: {
      const long n2 = n * n, n3 = n2 * n;
      return point_relation(f, n,
                            {Rat(2), ratio(5 + 8 * n + 4 * n2, 2 * n + 1), ratio(22 + 33 * n + 20 * n2 + 4 * n3, 2 * n + 1),
                             ratio(-n * (7 + 8 * n + 4 * n2), 2 * n + 1), true,
                             ratio((2 * n - 1) * (2 * n + 3), (2 * n + 1) * (2 * n + 1))});
    }
  }
  throw std::logic_error("unreachable");
}

RelationReport check_relation(RelationId id, int n) {
  RelationReport rep;
  auto res = relation_residuals(id, n);
  for (size_t i = 0; i < res.size(); ++i)
    if (!res[i].is_zero()) {
      rep.ok = false;
      rep.failing_parts.push_back(static_cast<int>(i));
    }
  return rep;
}

}  // namespace hankel
