#pragma once

#include <optional>
#include <vector>

#include "hankel/family.hpp"
#include "hankel/serialize.hpp"

namespace hankel {

using PolyMatrix = std::vector<std::vector<Poly>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// [a_{i+j}]_{0<=i,j<=n}
PolyMatrix hankel_matrix(const FamilyId& f, int n);
// Row i, column c holds a_{i + cols[c]}; rows 0..n.
PolyMatrix layout_matrix(const FamilyId& f, int n, const std::vector<int>& cols);

// Fraction-free (Bareiss) elimination over Q[x]. Every interior division must be exact;
// a remainder throws std::logic_error. Row updates of each step run under OpenMP.
Poly det_fraction_free(PolyMatrix m);
// Same algorithm, one thread, kept as the reference for the parallel kernel.
Poly det_fraction_free_serial(PolyMatrix m);
// Laplace expansion along the first row; the oracle for small sizes.
Poly det_cofactor(const PolyMatrix& m);
// Bareiss over Q for point values.
Rat det_rational(RatMatrix m);

enum class Variant { H, K, M, N };
const char* to_string(Variant v);
Variant parse_variant(const std::string& s);
std::vector<int> variant_columns(Variant v, int n);  // throws for M, N at n == 0

// Memoized determinant of the given layout.
const Poly& hankel_det(const FamilyId& f, int n, Variant v = Variant::H);
// Same value at a rational point, computed without the symbolic determinant.
Rat hankel_det_at(const FamilyId& f, int n, const Rat& x, Variant v = Variant::H);

struct HankelQuartet {
  FamilyId family;
  int n = 0;
  Poly H, K;
  std::optional<Poly> M, N;  // n >= 1 only
};

HankelQuartet quartet(const FamilyId& f, int n);

// H_{n-1} H_{n+1} == H_n N_n - H_n M_n - K_n^2
bool dodgson_check(const FamilyId& f, int n);

struct DegreeInstance {
  std::vector<int> p, q;
  std::vector<Rat> alphas, betas;
  Rat gamma;
};

PolyMatrix degree_matrix(const DegreeInstance& inst);
Poly general_degree_det(const DegreeInstance& inst);
int degree_bound(const DegreeInstance& inst);  // max(max p + max q - n, 0)

Json to_json(const PolyMatrix& m);

}  // namespace hankel
