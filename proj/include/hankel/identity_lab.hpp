#pragma once

#include <string>
#include <vector>

#include "hankel/hankel.hpp"

namespace hankel {

// ---- sequence-level identities among a_{k-1..k+2}, c_{k-1..k+2}, d_x a_k
enum class IdentityId { L1_31, L2_31, L1_21, L2_21, L1_30, L2_30, L1_3k2m, L2_3k2m, L1_aex, L2_aex, L1_30_printed };

std::vector<IdentityId> all_identities();  // the ten asserted ones
std::string to_string(IdentityId id);
IdentityId parse_identity(const std::string& s);
FamilyId identity_family(IdentityId id);
Poly identity_residual(IdentityId id, long k);

struct IdentityReport {
  bool ok = true;
  std::vector<long> failing;
};
IdentityReport check_identity(IdentityId id, long k_max);

// ---- determinant-level relations
enum class RelationId {
  R_det01,
  R_linear,
  R_intermediate,
  R_secondder,
  R_rhs,
  R_x3,
  R_x3half,
  R_x3quarter,
  R_Crec,
  R_21_first,
  R_21_first_printed,
  R_21_second,
  R_21_factored,
  R_21_third,
  R_21_x0,
  R_21_x2
};

std::vector<RelationId> all_relations();  // asserted ones, without the printed variant
std::string to_string(RelationId id);
RelationId parse_relation(const std::string& s);
FamilyId relation_family(RelationId id);
// One residual per sub-identity; all zero when the relation holds. Point relations give constants.
std::vector<Poly> relation_residuals(RelationId id, int n);

struct RelationReport {
  bool ok = true;
  std::vector<int> failing_parts;
};
RelationReport check_relation(RelationId id, int n);

// ---- [c_{i+j}] = E A + A E^T and [c_{i+j-1}] = F A + A F^T
PolyMatrix e_matrix(const FamilyId& f, int n);
PolyMatrix f_matrix(const FamilyId& f, int n);
struct MatrixIdentityReport {
  bool e_ok = false;
  bool f_ok = false;
};
MatrixIdentityReport check_matrix_convolution_identities(const FamilyId& f, int n);

// ---- linear transformation rules: H_n Tr(A^{-1} X) against the stated value
struct TransformRuleResult {
  std::string rule;
  bool ok = false;
};
std::vector<TransformRuleResult> check_transform_rules(const FamilyId& f, int n);
// H_n Tr(A_n^{-1} X) = sum_i det(A_n with column i replaced by column i of X)
Poly scaled_trace(const FamilyId& f, int n, const PolyMatrix& x);

// ---- third identity weights
struct WeightSolution {
  FamilyId family;
  int n = 0;
  std::vector<Rat> q0;   // y-coefficients, length n+2, lowest nonzero entry 1
  std::vector<Rat> q1;   // truncation of s*Q0 to y^{n+1}
  std::vector<Poly> q2;  // y-coefficients, length n+3
  std::vector<Poly> weights;  // w_{n,j} = C_{n+2-j}(Q2), j = 0..n+2
  Rat scale;             // w_{n,n+2} = scale * p_n
  int nullity = 0;
};

// p_n, q_n, r_n of the stated top weights, for (3,1) or (2,1).
std::vector<Poly> pqr(const FamilyId& f, long n);

// Throws std::runtime_error when the nullspace is not one-dimensional.
WeightSolution weight_nullspace(const FamilyId& f, int n);
bool weights_annihilate(const WeightSolution& w);
bool top_weights_match(const WeightSolution& w);
// w_{n+2} N + w_{n+1} K + w_n H = 0
bool ciden_check(const WeightSolution& w);
// Coefficient relations among C_k(Q0), C_k(Q1), C_k(Q2) plus the parametric solution.
bool csystem_check(const WeightSolution& w);

std::vector<Poly> explicit_weights(const FamilyId& f, int n);
struct WeightComparison {
  bool match = false;   // explicit == nullspace / scale, entry by entry
  std::string detail;
};
WeightComparison compare_explicit_weights(const FamilyId& f, int n);

// Rational nullspace basis (row-reduction), one vector per free column.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

}  // namespace hankel
