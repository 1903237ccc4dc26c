#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hankel/family.hpp"

namespace hankel {

enum class ProductFormulaId {
  P32,
  P30,
  P31at3,
  P31at3half,
  P31at3quarter,
  P30at3,
  P30at3half,
  PAexAt3sevenths,
  P21at0,
  P21at2
};

struct ProductTarget {
  FamilyId family;
  Rat x;
};

std::vector<ProductFormulaId> all_product_formulas();
std::string to_string(ProductFormulaId id);
ProductFormulaId parse_product_formula(const std::string& s);
// Which determinant the product claims to evaluate. P32 points at (3,1) at x = 1.
ProductTarget product_target(ProductFormulaId id);
Rat product_eval(ProductFormulaId id, int n);

enum class AlmostProductId { AP31, AP31alt, AP21, AP31at0, AP31at1, AP21at0, AP21at1 };

std::vector<AlmostProductId> all_almost_products();
std::string to_string(AlmostProductId id);
AlmostProductId parse_almost_product(const std::string& s);
// Prefactor times the (n+1)-term sum, as a polynomial in x (constant for the *at* variants).
Poly almost_product_poly(AlmostProductId id, int n);
// Substitutes x into each term before summing.
Rat almost_product_at(AlmostProductId id, int n, const Rat& x);

struct OdeSpec {
  std::string id;
  FamilyId family;
  int order = 2;
  bool asserted = true;  // false: mismatches are findings
  std::function<std::vector<Poly>(long n)> coeffs;  // coefficient of d^k y at index k
};

const std::vector<OdeSpec>& ode_specs();
const OdeSpec& ode_spec(const std::string& id);
Poly ode_residual(const OdeSpec& spec, long n, const Poly& y);

enum class ThreeTermCase { C31, C21 };
// p_n, q_n of the (3,1) three-term recursion.
Poly three_term_p31(long n);
Poly three_term_q31(long n);
bool three_term_check(ThreeTermCase c, int n);

// Iterates the x = 1 recursion for H^{(3,2)}; also asserts -1/q_{n+1}(1) equals the displayed ratio.
Rat recursion_31at1(int n);

struct ChebyshevJacobiReport {
  bool chebyshev = false;
  bool jacobi_shift = false;   // H over 2k+2-shift vs the scaled Jacobi polynomial
  bool jacobi_21 = false;      // H^{(2,1)}(x) vs the same at x - 1
  bool de2np2ak = false;
  bool all() const { return chebyshev && jacobi_shift && jacobi_21 && de2np2ak; }
};

Poly chebyshev_u(int n);  // U_{-1} = 0
Poly jacobi_p(int n, const Rat& a, const Rat& b);
ChebyshevJacobiReport chebyshev_jacobi_check(int n);

// H_n^{(3,1)} has n distinct real roots strictly between consecutive roots of H_{n+1}^{(3,1)}.
bool interlace_check(int n);

}  // namespace hankel
