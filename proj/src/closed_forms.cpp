#include "hankel/closed_forms.hpp"

#include <map>
#include <stdexcept>

#include "hankel/combinat.hpp"
#include "hankel/hankel.hpp"
#include "hankel/sturm.hpp"

namespace hankel {

namespace {

Rat F(long m) { return Rat(factorial(m)); }
Rat DF(long m) { return Rat(double_factorial(m)); }
Rat sgn_pow(long e) { return Rat(e % 2 ? -1 : 1); }

template <class Term>
Rat prod(long lo, long hi, Term term) {
  Rat r(1);
  for (long i = lo; i <= hi; ++i) r *= term(i);
  return r;
}

Rat c31(long n) {
  return sgn_pow(n) * prod(1, n, [](long i) -> Rat {
           return F(6 * i - 3) * F(3 * i + 2) * F(2 * i - 1) / (F(4 * i - 1) * F(4 * i + 1) * F(3 * i - 2));
         });
}

Rat p32(long n) {
  return prod(1, n, [](long i) -> Rat { return F(6 * i + 4) * F(2 * i + 1) / (2 * F(4 * i + 2) * F(4 * i + 3)); });
}

}  // namespace

std::vector<ProductFormulaId> all_product_formulas() {
  using P = ProductFormulaId;
  return {P::P32, P::P30, P::P31at3, P::P31at3half, P::P31at3quarter, P::P30at3, P::P30at3half, P::PAexAt3sevenths,
          P::P21at0, P::P21at2};
}

std::string to_string(ProductFormulaId id) {
  switch (id) {
    case ProductFormulaId::P32: return "P32";
    case ProductFormulaId::P30: return "P30";
    case ProductFormulaId::P31at3: return "P31at3";
    case ProductFormulaId::P31at3half: return "P31at3half";
    case ProductFormulaId::P31at3quarter: return "P31at3quarter";
    case ProductFormulaId::P30at3: return "P30at3";
    case ProductFormulaId::P30at3half: return "P30at3half";
    case ProductFormulaId::PAexAt3sevenths: return "PAexAt3sevenths";
    case ProductFormulaId::P21at0: return "P21at0";
    case ProductFormulaId::P21at2: return "P21at2";
  }
  return "?";
}

ProductFormulaId parse_product_formula(const std::string& s) {
  for (auto id : all_product_formulas())
    if (to_string(id) == s) return id;
  throw std::invalid_argument("unknown product formula: " + s);
}

ProductTarget product_target(ProductFormulaId id) {
  const auto f31 = FamilyId::binom(3, 1), f30 = FamilyId::binom(3, 0), f21 = FamilyId::binom(2, 1);
  switch (id) {
    case ProductFormulaId::P32: return {f31, Rat(1)};
    case ProductFormulaId::P30: return {f30, Rat(0)};
    case ProductFormulaId::P31at3: return {f31, Rat(3)};
    case ProductFormulaId::P31at3half: return {f31, Rat(3, 2)};
    case ProductFormulaId::P31at3quarter: return {f31, Rat(3, 4)};
    case ProductFormulaId::P30at3: return {f30, Rat(3)};
    case ProductFormulaId::P30at3half: return {f30, Rat(3, 2)};
    case ProductFormulaId::PAexAt3sevenths: return {FamilyId::aex(), Rat(3, 7)};
    case ProductFormulaId::P21at0: return {f21, Rat(0)};
    case ProductFormulaId::P21at2: return {f21, Rat(2)};
  }
  throw std::logic_error("unreachable");
}

Rat product_eval(ProductFormulaId id, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  switch (id) {
    case ProductFormulaId::P32: return p32(n);
    case ProductFormulaId::P30:
      return prod(1, n, [](long i) -> Rat { return 3 * (3 * i + 1) * F(6 * i) * F(2 * i) / (F(4 * i) * F(4 * i + 1)); });
    case ProductFormulaId::P31at3: return c31(n);
    case ProductFormulaId::P31at3half:
      return prod(1, n, [](long i) -> Rat { return F(2 * i - 1) * F(6 * i) * (3 * i + 1) / (2 * F(4 * i - 1) * F(4 * i + 1)); });
    case ProductFormulaId::P31at3quarter:
      return prod(1, n, [](long i) -> Rat { return F(2 * i - 1) * F(6 * i + 1) / (2 * F(4 * i - 1) * F(4 * i + 1)); });
    case ProductFormulaId::P30at3:
      return F(3 * n) * F(3 * n + 2) / (2 * F(n) * F(n)) * prod(1, n, [](long i) -> Rat {
               return 3 * F(6 * i - 5) * F(2 * i) * (2 * i - 1) / (F(4 * i + 1) * F(4 * i - 1));
             });
    case ProductFormulaId::P30at3half:
      return prod(1, n, [](long i) -> Rat {
        return 27 * F(6 * i - 5) * ((3 * i - 1) * (3 * i - 2)) * F(2 * i - 1) / (2 * F(4 * i - 1) * (4 * i - 3) * F(4 * i - 4));
      });
    case ProductFormulaId::PAexAt3sevenths:
      return prod(0, n, [](long i) -> Rat { return 2 * F(6 * i + 7) * F(2 * i + 1) / (7 * F(4 * i + 5) * F(4 * i + 3)); });
    case ProductFormulaId::P21at0: return Rat(1);
    case ProductFormulaId::P21at2: return sgn_pow(n) * (2 * n + 1);
  }
  throw std::logic_error("unreachable");
}

std::vector<AlmostProductId> all_almost_products() {
  using A = AlmostProductId;
  return {A::AP31, A::AP31alt, A::AP21, A::AP31at0, A::AP31at1, A::AP21at0, A::AP21at1};
}

std::string to_string(AlmostProductId id) {
  switch (id) {
    case AlmostProductId::AP31: return "AP31";
    case AlmostProductId::AP31alt: return "AP31alt";
    case AlmostProductId::AP21: return "AP21";
    case AlmostProductId::AP31at0: return "AP31at0";
    case AlmostProductId::AP31at1: return "AP31at1";
    case AlmostProductId::AP21at0: return "AP21at0";
    case AlmostProductId::AP21at1: return "AP21at1";
  }
  return "?";
}

AlmostProductId parse_almost_product(const std::string& s) {
  for (auto id : all_almost_products())
    if (to_string(id) == s) return id;
  throw std::invalid_argument("unknown almost-product formula: " + s);
}

namespace {

// prefactor, and term i as (coefficient, shift point s) meaning coefficient * (x - s)^i
struct AlmostShape {
  Rat prefactor;
  Rat shift;
  std::function<Rat(long)> coeff;
  bool pointwise = false;  // the corollaries: the sum is already a number
};

AlmostShape shape(AlmostProductId id, long n) {
  switch (id) {
    case AlmostProductId::AP31:
    case AlmostProductId::AP31at0:
    case AlmostProductId::AP31at1: {
      Rat base = 2;
      if (id == AlmostProductId::AP31at0) base = -6;
      if (id == AlmostProductId::AP31at1) base = -4;
      return {c31(n), Rat(3),
              [n, base](long i) -> Rat {
                return F(n) * F(3 * n + i + 2) * pow_rat(base, i) / (F(3 * n + 2) * F(n - i) * F(2 * i + 1));
              },
              id != AlmostProductId::AP31};
    }
    case AlmostProductId::AP31alt:
      return {p32(n), Rat(1),
              [n](long i) -> Rat {
                return sgn_pow(i) * F(n) * DF(4 * n + 3) * F(3 * n + i + 2) /
                       (F(3 * n + 2) * F(i) * F(n - i) * DF(4 * n + 2 * i + 3));
              },
              false};
    case AlmostProductId::AP21:
    case AlmostProductId::AP21at0:
    case AlmostProductId::AP21at1: {
      Rat base = 2;
      if (id == AlmostProductId::AP21at0) base = -4;
      if (id == AlmostProductId::AP21at1) base = -2;
      return {sgn_pow(n) * (2 * n + 1), Rat(2),
              [n, base](long i) -> Rat { return F(n + i) * pow_rat(base, i) / (F(n - i) * F(2 * i + 1)); },
              id != AlmostProductId::AP21};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Poly almost_product_poly(AlmostProductId id, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  auto s = shape(id, n);
  if (s.pointwise) return Poly(almost_product_at(id, n, Rat(0)));
  const Poly lin = Poly::x() - Poly(s.shift);
  Poly sum, power(1L);
  for (long i = 0; i <= n; ++i) {
    sum += s.coeff(i) * power;
    power = power * lin;
  }
  return s.prefactor * sum;
}

Rat almost_product_at(AlmostProductId id, int n, const Rat& x) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  auto s = shape(id, n);
  Rat sum(0), power(1), d = s.pointwise ? Rat(1) : Rat(x - s.shift);
  for (long i = 0; i <= n; ++i) {
    sum += s.coeff(i) * power;
    power *= d;
  }
  return s.prefactor * sum;
}

namespace {

std::vector<Poly> fig4_coeffs(long n, bool amended) {
  const Poly x = Poly::x();
  auto X = [&](int k) { return x.pow(k); };
  const long n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  Poly c4 = 2 * (3 * x - 1).pow(2) * (x - 3).pow(3) * x *
            (4 * (n + 2) * (2 * n + 1) * X(2) + (8 * n2 + 20 * n + 11) * x - 1);
  Poly c3 = (x - 3).pow(2) * (3 * x - 1) *
            (12 * (n + 2) * (2 * n + 1) * (8 * n + 27) * X(4) - 3 * (128 * n3 + 568 * n2 + 724 * n + 161) * X(3) -
             (576 * n3 + 3016 * n2 + 4756 * n + 2269) * X(2) + (72 * n2 + 252 * n + 319) * x - 15);
  const long t6704 = amended ? 6704 * n3 : 6704;
  Poly c2 = 3 * (x - 3) *
            (12 * (8 * n4 + 118 * n3 + 427 * n2 + 533 * n + 174) * X(5) -
             (736 * n4 + t6704 + 19628 * n2 + 21289 * n + 5814) * X(4) +
             (800 * n4 + 2944 * n3 + 564 * n2 - 7580 * n - 7078) * X(3) +
             2 * (816 * n4 + 6744 * n3 + 19358 * n2 + 23069 * n + 9809) * X(2) -
             6 * (108 * n3 + 540 * n2 + 972 * n + 679) * x + 15 * (9 * n + 20));
  const long c556 = amended ? 55690 : 556990;
  Poly c1 = -3 * (12 * (16 * n5 + 62 * n4 - 7 * n3 - 293 * n2 - 378 * n - 120) * X(5) -
                  (960 * n5 + 3104 * n4 - 3080 * n3 - 20993 * n2 - 23419 * n - 6450) * X(4) +
                  4 * (144 * n5 - 4 * n4 - 2300 * n3 - 4657 * n2 - 2040 * n + 838) * X(3) +
                  (1728 * n5 + 6624 * n4 - 5832 * n3 - c556 * n2 - 80626 * n - 36004) * X(2) +
                  12 * (318 * n4 + 1995 * n3 + 4670 * n2 + 4928 * n + 2058) * x - (783 * n2 + 3105 * n + 3102));
  const long c3388 = amended ? 3338 : 3388;
  Poly c0 = -3 * n * (n + 1) *
            (12 * (12 * n4 + 68 * n3 + 137 * n2 + 113 * n + 30) * X(4) -
             (864 * n4 + 4488 * n3 + 8158 * n2 + 5887 * n + 1222) * X(3) +
             (720 * n4 + 2304 * n3 + 280 * n2 - 4547 * n - c3388) * X(2) +
             3 * (576 * n4 + 3816 * n3 + 9182 * n2 + 9533 * n + 3666) * x - 3 * (120 * n2 + 507 * n + 538));
  return {c0, c1, c2, c3, c4};
}

std::vector<OdeSpec> build_specs() {
  const Poly x = Poly::x();
  std::vector<OdeSpec> s;
  s.push_back({"de1", FamilyId::binom(3, 1), 2, true, [x](long n) -> std::vector<Poly> {
                 return {Poly(-3 * n * (n + 1)), 2 * (n + 2) * (x - 3) + 3, (x - 1) * (x - 3)};
               }});
  s.push_back({"de2np1", FamilyId::binom(2, 1), 2, true, [x](long n) -> std::vector<Poly> {
                 return {Poly(-n * (n + 1)), 2 * x - 1, x * (x - 2)};
               }});
  s.push_back({"thme1", FamilyId::binom(3, 0), 2, true, [x](long n) -> std::vector<Poly> {
                 return {n * (10 * (n - 1) * x - 3 * (n - 7)),
                         -2 * (10 * (n - 1) * x * x - 9 * (3 * n - 4) * x - 9 * (n + 5)),
                         (x - 3) * (2 * x - 3) * (5 * x - 3)};
               }});
  s.push_back({"thme2", FamilyId::three_k_minus_2m(), 2, true, [x](long n) -> std::vector<Poly> {
                 return {Poly(-12 * n * (n + 1)), 4 * (2 * (n + 2) * x - 9 * (n + 1)), (2 * x + 3) * (2 * x - 9)};
               }});
  s.push_back({"thme3", FamilyId::aex(), 2, true, [x](long n) -> std::vector<Poly> {
                 return {3 * n * (n + 1) * (x - 1), -2 * (3 * n * x * x - 8 * n * x - 3 * (n + 4)),
                         (3 * x - 1) * (x - 1) * (x - 3)};
               }});
  s.push_back({"thme4", FamilyId::shift_3k1(), 2, true, [x](long n) -> std::vector<Poly> {
                 return {n * (10 * (n - 1) * x + 7 * n + 11),
                         -2 * (10 * (n - 1) * x * x - (7 * n - 16) * x - 26 * n - 19),
                         (x - 2) * (2 * x - 1) * (5 * x + 2)};
               }});
  s.push_back({"de2np2ak", FamilyId::shift_2k2(), 2, true, [x](long n) -> std::vector<Poly> {
                 return {Poly(-n * (n + 1)), 2 * x + 1, x * x - 1};
               }});
  s.push_back({"fig4", FamilyId::binom(3, 2), 4, false, [](long n) { return fig4_coeffs(n, false); }});
  s.push_back({"fig4-amended", FamilyId::binom(3, 2), 4, true, [](long n) { return fig4_coeffs(n, true); }});
  return s;
}

}  // namespace

const std::vector<OdeSpec>& ode_specs() {
  static const std::vector<OdeSpec> specs = build_specs();
  return specs;
}

const OdeSpec& ode_spec(const std::string& id) {
  for (const auto& s : ode_specs())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown differential equation: " + id);
}

Poly ode_residual(const OdeSpec& spec, long n, const Poly& y) {
  auto cs = spec.coeffs(n);
  Poly r, d = y;
  for (size_t k = 0; k < cs.size(); ++k) {
    r += cs[k] * d;
    d = d.derivative();
  }
  return r;
}

Poly three_term_p31(long n) {
  const Poly x = Poly::x();
  Rat k = 4 * F(4 * n - 3) * F(4 * n - 3) * F(4 * n - 1) * F(4 * n - 1) /
          (9 * Rat((3 * n - 2) * (3 * n - 2) * (3 * n - 1) * (3 * n - 1)) * F(2 * n - 1) * F(2 * n - 1) * F(6 * n - 5) *
           F(6 * n - 5));
  return k * (x - 1).pow(2);
}

Poly three_term_q31(long n) {
  const Poly x = Poly::x();
  Rat k = 4 * (n - 1) * F(4 * n - 5) * F(4 * n - 1) /
          (3 * Rat((3 * n - 2) * (3 * n - 1) * (4 * n + 1)) * F(2 * n - 1) * F(6 * n - 5));
  Poly cubic = 8 * (4 * n - 3) * (4 * n + 1) * x.pow(3) - 36 * (4 * n - 3) * (4 * n + 1) * x * x +
               6 * (126 * n * n - 63 * n - 23) * x - 3 * (108 * n * n - 54 * n - 19);
  return k * cubic;
}

bool three_term_check(ThreeTermCase c, int n) {
  if (n < 2) throw std::invalid_argument("three-term recursion needs n >= 2");
  if (c == ThreeTermCase::C31) {
    const auto f = FamilyId::binom(3, 1);
    Poly r = three_term_p31(n) * hankel_det(f, n) + three_term_q31(n) * hankel_det(f, n - 1) + hankel_det(f, n - 2);
    return r.is_zero();
  }
  const auto f = FamilyId::binom(2, 1);
  const Poly x = Poly::x();
  return hankel_det(f, n) == 2 * (1 - x) * hankel_det(f, n - 1) - hankel_det(f, n - 2);
}

Rat recursion_31at1(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Rat h(1);
  for (long i = 1; i <= n; ++i) {
    Rat ratio = 3 * Rat((3 * i + 1) * (3 * i + 2)) * F(2 * i + 1) * F(6 * i + 1) /
                (4 * Rat(i * (4 * i + 1)) * F(4 * i - 1) * F(4 * i + 3));
    Rat via_q = -1 / three_term_q31(i + 1).eval(Rat(1));
    if (ratio != via_q)
      throw std::logic_error("x = 1 recursion ratio disagrees with -1/q_{n+1}(1) at n = " + std::to_string(i));
    h *= ratio;
  }
  return h;
}

Poly chebyshev_u(int n) {
  if (n < -1) throw std::invalid_argument("U_n needs n >= -1");
  if (n == -1) return Poly();
  const Poly x = Poly::x();
  Poly prev(1L), cur = 2 * x;
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    Poly next = 2 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly jacobi_p(int n, const Rat& a, const Rat& b) {
  if (n < 0) throw std::invalid_argument("P_n needs n >= 0");
  const Poly x = Poly::x();
  Poly prev(1L);
  if (n == 0) return prev;
  // P_1 written out: the general step divides by (2n+a+b-2), which vanishes at n = 1 when a+b = 0
  Poly cur = Poly(Rat(a + 1)) + Rat((a + b + 2) / 2) * (x - 1);
  for (long k = 2; k <= n; ++k) {
    Rat s = 2 * k + a + b;
    Rat lead = 2 * k * (k + a + b) * (s - 2);
    Poly term = (s - 1) * (Rat(s * (s - 2)) * x + Poly(Rat(a * a - b * b))) * cur -
                Rat(2 * (k + a - 1) * (k + b - 1) * s) * prev;
    Poly next = Rat(1 / lead) * term;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ChebyshevJacobiReport chebyshev_jacobi_check(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  ChebyshevJacobiReport rep;
  const auto f21 = FamilyId::binom(2, 1);
  const auto fs = FamilyId::shift_2k2();
  const Poly& h21 = hankel_det(f21, n);
  const Poly& hs = hankel_det(fs, n);
  rep.chebyshev = h21 == chebyshev_u(n).compose_affine(-1, 1) - chebyshev_u(n - 1).compose_affine(-1, 1);
  Rat scale = pow_rat(Rat(-4), n) * F(n) * F(n) / F(2 * n);
  Poly p = jacobi_p(n, Rat(1, 2), Rat(-1, 2));
  rep.jacobi_shift = hs == scale * p;
  rep.jacobi_21 = h21 == scale * p.compose_affine(1, -1);
  rep.de2np2ak = ode_residual(ode_spec("de2np2ak"), n, hs).is_zero();
  return rep;
}

bool interlace_check(int n) {
  if (n < 1) throw std::invalid_argument("interlacing needs n >= 1");
  const auto f = FamilyId::binom(3, 1);
  const Poly& hn = hankel_det(f, n);
  const Poly& hn1 = hankel_det(f, n + 1);
  if (gcd(hn, hn1).degree() > 0) return false;
  auto outer = isolate_real_roots(hn1);
  auto inner = isolate_real_roots(hn);
  if (static_cast<int>(outer.size()) != n + 1 || static_cast<int>(inner.size()) != n) return false;
  // shrink each root interval of H_{n+1} until it holds no root of H_n
  for (auto& [lo, hi] : outer) {
    while (sturm_count(hn, lo, hi) > 0) {
      Rat mid = (lo + hi) / 2;
      if (sturm_count(hn1, lo, mid) == 1) hi = mid;
      else lo = mid;
    }
  }
  for (size_t i = 0; i + 1 < outer.size(); ++i)
    if (sturm_count(hn, outer[i].second, outer[i + 1].first) != 1) return false;
  return true;
}

}  // namespace hankel
