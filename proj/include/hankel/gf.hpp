#pragma once

#include <optional>
#include <string>

#include "hankel/family.hpp"
#include "hankel/series.hpp"

namespace hankel {

enum class GfForm { Direct, Closed31, Closed21, Closed30, Closed3k2m, ClosedAex };

std::string to_string(GfForm f);
GfForm parse_gf_form(const std::string& s);

// t with t^beta y = t - 1: coefficients (beta k)! / (((beta-1)k+1)! k!).
SeriesYX t_series(int beta, int order);
// (3k)! / ((2k)! (k+1)!), taken literally.
SeriesYX tau_series(int order);

// A form as num/den, both already truncated; f * den == num.
struct GfFraction {
  SeriesYX num;
  SeriesYX den;
};

bool compatible(GfForm form, const FamilyId& f);
std::optional<GfForm> closed_form_for(const FamilyId& f);
GfFraction gf_fraction(GfForm form, const FamilyId& f, int order);  // throws on incompatible pair

SeriesYX f_series(GfForm form, const FamilyId& f, int order);

struct EquivReport {
  bool equal = true;
  int first_mismatch = -1;  // y-power of the first nonzero residual coefficient
  std::string detail;
};

// Cross-multiplied comparison numA*denB - numB*denA == 0 mod y^{order+1}.
EquivReport gf_form_equiv(GfForm a, GfForm b, const FamilyId& f, int order);

}  // namespace hankel
