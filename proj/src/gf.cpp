#include "hankel/gf.hpp"

#include <stdexcept>

#include "hankel/combinat.hpp"

namespace hankel {

std::string to_string(GfForm f) {
  switch (f) {
    case GfForm::Direct: return "direct";
    case GfForm::Closed31: return "closed31";
    case GfForm::Closed21: return "closed21";
    case GfForm::Closed30: return "closed30";
    case GfForm::Closed3k2m: return "closed3k2m";
    case GfForm::ClosedAex: return "closedaex";
  }
  return "?";
}

GfForm parse_gf_form(const std::string& s) {
  for (auto f : {GfForm::Direct, GfForm::Closed31, GfForm::Closed21, GfForm::Closed30, GfForm::Closed3k2m,
                 GfForm::ClosedAex})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown generating-function form: " + s);
}

SeriesYX t_series(int beta, int order) {
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  SeriesYX t(order);
  for (long k = 0; k <= order; ++k)
    t[k] = Poly(make_rat(factorial(beta * k), factorial((beta - 1) * k + 1) * factorial(k)));
  return t;
}

SeriesYX tau_series(int order) {
  SeriesYX t(order);
  for (long k = 0; k <= order; ++k) t[k] = Poly(make_rat(factorial(3 * k), factorial(2 * k) * factorial(k + 1)));
  return t;
}

bool compatible(GfForm form, const FamilyId& f) {
  switch (form) {
    case GfForm::Direct: return true;
    case GfForm::Closed31: return f.is_binom(3, 1);
    case GfForm::Closed21: return f.is_binom(2, 1);
    case GfForm::Closed30: return f.is_binom(3, 0);
    case GfForm::Closed3k2m: return f.kind == FamilyKind::ThreeKMinus2M;
    case GfForm::ClosedAex: return f.kind == FamilyKind::Aex;
  }
  return false;
}

std::optional<GfForm> closed_form_for(const FamilyId& f) {
  for (auto form : {GfForm::Closed31, GfForm::Closed21, GfForm::Closed30, GfForm::Closed3k2m, GfForm::ClosedAex})
    if (compatible(form, f)) return form;
  return std::nullopt;
}

namespace {

struct DirectShape {
  int beta, gamma, alpha;
};

DirectShape direct_shape(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::BinomBA: return {f.beta, f.beta - 1, f.alpha};
    case FamilyKind::ThreeKMinus2M: return {3, 1, 0};
    case FamilyKind::ShiftThreeKPlus1: return {3, 3, 1};
    case FamilyKind::ShiftTwoKPlus2: return {2, 2, 2};
    case FamilyKind::Aex: break;
  }
  throw std::logic_error("no single-fraction direct shape");
}

GfFraction direct(const FamilyId& f, int order) {
  const Poly x = Poly::x();
  if (f.kind == FamilyKind::Aex) {
    // k-th coefficient of 2t / ((3-2t)(1 - x y t^2)^3), then divided by k+1
    SeriesYX t = t_series(3, order);
    SeriesYX one = SeriesYX::constant(order, 1L);
    SeriesYX inner = one - x * (t * t).shift(1);
    SeriesYX g = SeriesYX::solve(Poly(2L) * t, (SeriesYX::constant(order, 3L) - Poly(2L) * t) * inner.pow(3));
    for (int k = 0; k <= order; ++k) g[k] *= make_rat(1, k + 1);
    return {g, one};
  }
  auto [beta, gamma, alpha] = direct_shape(f);
  SeriesYX t = t_series(beta, order);
  SeriesYX den = (SeriesYX::constant(order, Poly(long(beta))) + Poly(long(1 - beta)) * t) *
                 (SeriesYX::constant(order, 1L) - x * t.pow(gamma).shift(1));
  return {t.pow(alpha + 1), den};
}

}  // namespace

GfFraction gf_fraction(GfForm form, const FamilyId& f, int order) {
  if (!compatible(form, f))
    throw std::invalid_argument("form " + to_string(form) + " does not apply to family " + f.name());
  const Poly x = Poly::x();
  auto C = [&](const Poly& p) { return SeriesYX::constant(order, p); };
  const SeriesYX y = SeriesYX::y_power(order, 1);
  switch (form) {
    case GfForm::Direct: return direct(f, order);
    case GfForm::Closed31: {
      SeriesYX t = t_series(3, order);
      SeriesYX eta = Poly(2L) * t - C(3L);
      SeriesYX num = Poly(2L) * t + C(4 * x - 6);
      SeriesYX den = (x - 3) * (4 * x - 3) * (y * eta) - (x - 1) * (Poly(27L) * y - C(4L));
      return {num, den};
    }
    case GfForm::Closed21: {
      SeriesYX t = t_series(2, order);
      SeriesYX den = (x - 2) * (y * t) + C(1L) - Poly(2 * x) * y;
      return {t, den};
    }
    case GfForm::Closed30: {
      SeriesYX t = t_series(3, order);
      SeriesYX num = -(2 * x - 3) * t - C(3 * x);
      SeriesYX den = ((x * x) * (Poly(9L) * y - C(4L)) + C(10 * x - 6)) * t + C((x - 3) * (4 * x - 3));
      return {num, den};
    }
    case GfForm::Closed3k2m: {
      SeriesYX t = t_series(3, order);
      SeriesYX num = Poly(3L) * t + C(2 * x);
      SeriesYX den = (x * (4 * x - 9) * y - C(6L)) * t + C(9 + 2 * x) - Poly(6 * x * x) * y;
      return {num, den};
    }
    case GfForm::ClosedAex: {
      SeriesYX tau = tau_series(order);
      Poly xm1sq = (x - 1) * (x - 1);
      SeriesYX num = Poly(2 * xm1sq) * tau - C(2 * xm1sq) - C(2 * (3 * x - 1));
      Poly x2x3 = x * x * (x - 3);
      SeriesYX den = Poly(-2 * x2x3) * (y * tau) + Poly(2 * x2x3) * y + Poly(6 * x * x) * y + C(1 - 3 * x);
      return {num, den};
    }
  }
  throw std::logic_error("unreachable");
}

SeriesYX f_series(GfForm form, const FamilyId& f, int order) {
  auto [num, den] = gf_fraction(form, f, order);
  return SeriesYX::solve(num, den);
}

EquivReport gf_form_equiv(GfForm a, GfForm b, const FamilyId& f, int order) {
  auto fa = gf_fraction(a, f, order);
  auto fb = gf_fraction(b, f, order);
  SeriesYX r = fa.num * fb.den - fb.num * fa.den;
  EquivReport rep;
  for (int k = 0; k <= order; ++k) {
    if (!r[k].is_zero()) {
      rep.equal = false;
      rep.first_mismatch = k;
      rep.detail = "residual at y^" + std::to_string(k) + ": " + to_string(r[k]);
      return rep;
    }
  }
  rep.detail = "agree through y^" + std::to_string(order);
  return rep;
}

}  // namespace hankel
