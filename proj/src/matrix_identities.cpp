#include <stdexcept>

#include "hankel/identity_lab.hpp"

namespace hankel {

namespace {

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const size_t n = a.size();
  PolyMatrix r(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

PolyMatrix transpose(const PolyMatrix& a) {
  const size_t n = a.size();
  PolyMatrix r(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

PolyMatrix add(PolyMatrix a, const PolyMatrix& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  return a;
}

template <class Entry>
PolyMatrix build(int n, Entry e) {
  PolyMatrix m(n + 1, std::vector<Poly>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m[i][j] = e(i, j);
  return m;
}

}  // namespace

PolyMatrix e_matrix(const FamilyId& f, int n) {
  return build(n, [&](int i, int j) -> Poly {
    if (j > i) return Poly();
    if (j == 0) return make_rat(1, 2) * a_poly(f, i);
    return a_poly(f, i - j);
  });
}

PolyMatrix f_matrix(const FamilyId& f, int n) {
  return build(n, [&](int i, int j) -> Poly { return j < i ? a_poly(f, i - j - 1) : Poly(); });
}

MatrixIdentityReport check_matrix_convolution_identities(const FamilyId& f, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const PolyMatrix a = hankel_matrix(f, n);
  auto sym = [&](const PolyMatrix& e) { return add(matmul(e, a), matmul(a, transpose(e))); };
  MatrixIdentityReport rep;
  rep.e_ok = sym(e_matrix(f, n)) == build(n, [&](int i, int j) { return conv_poly(f, i + j); });
  rep.f_ok = sym(f_matrix(f, n)) == build(n, [&](int i, int j) { return conv_poly(f, i + j - 1); });
  return rep;
}

Poly scaled_trace(const FamilyId& f, int n, const PolyMatrix& x) {
  const PolyMatrix a = hankel_matrix(f, n);
  Poly total;
  for (int i = 0; i <= n; ++i) {
    PolyMatrix m = a;
    for (int r = 0; r <= n; ++r) m[r][i] = x[r][i];
    total += det_fraction_free(std::move(m));
  }
  return total;
}

std::vector<TransformRuleResult> check_transform_rules(const FamilyId& f, int n) {
  if (n < 1) throw std::invalid_argument("transform rules need n >= 1");
  const auto q = quartet(f, n);
  const Poly& H = q.H;
  const Poly& K = q.K;
  const Poly& M = *q.M;
  const Poly& N = *q.N;
  const Poly& a0 = a_poly(f, 0);
  const Poly& a1 = a_poly(f, 1);
  auto a = [&](int k) { return k < 0 ? Poly() : a_poly(f, k); };
  auto c = [&](int k) { return conv_poly(f, k); };
  const long nn = n;
  struct Rule {
    const char* name;
    PolyMatrix x;
    Poly expected;
  };
  std::vector<Rule> rules;
  rules.push_back({"d_x a_n -> d_x H_n", build(n, [&](int i, int j) { return a(i + j).derivative(); }), H.derivative()});
  rules.push_back({"n a_{n-1} -> 0", build(n, [&](int i, int j) { return (i + j) * a(i + j - 1); }), Poly()});
  rules.push_back({"c_{n-1} -> 0", build(n, [&](int i, int j) { return c(i + j - 1); }), Poly()});
  rules.push_back({"a_n -> (n+1) H_n", build(n, [&](int i, int j) { return a(i + j); }), (nn + 1) * H});
  rules.push_back({"n a_n -> n(n+1) H_n", build(n, [&](int i, int j) { return (i + j) * a(i + j); }), nn * (nn + 1) * H});
  rules.push_back({"c_n -> (2n+1) a_0 H_n", build(n, [&](int i, int j) { return c(i + j); }), (2 * nn + 1) * a0 * H});
  rules.push_back({"a_{n+1} -> K_n", build(n, [&](int i, int j) { return a(i + j + 1); }), K});
  rules.push_back({"n a_{n+1} -> 2n K_n", build(n, [&](int i, int j) { return (i + j) * a(i + j + 1); }), 2 * nn * K});
  rules.push_back({"c_{n+1} -> 2 a_0 K_n + 2n a_1 H_n", build(n, [&](int i, int j) { return c(i + j + 1); }),
                   2 * a0 * K + 2 * nn * a1 * H});
  rules.push_back({"a_{n+2} -> M_n + N_n", build(n, [&](int i, int j) { return a(i + j + 2); }), M + N});
  rules.push_back({"n a_{n+2} -> 2(n-1) M_n + 2n N_n", build(n, [&](int i, int j) { return (i + j) * a(i + j + 2); }),
                   2 * (nn - 1) * M + 2 * nn * N});
  std::vector<TransformRuleResult> out;
  for (auto& r : rules) out.push_back({r.name, scaled_trace(f, n, r.x) == r.expected});
  return out;
}

}  // namespace hankel
