#include <stdexcept>

#include "hankel/combinat.hpp"
#include "hankel/identity_lab.hpp"

namespace hankel {

std::vector<std::vector<Rat>> nullspace(const RatMatrix& in) {
  RatMatrix m = in;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

bool is31(const FamilyId& f) { return f.is_binom(3, 1); }

void require_weight_family(const FamilyId& f) {
  if (!f.is_binom(3, 1) && !f.is_binom(2, 1))
    throw std::invalid_argument("weights are defined for families 3,1 and 2,1 only");
}

// eta = 2t - 3 for (3,1), t for (2,1), as rationals through y^len-1
std::vector<Rat> s_coeffs(const FamilyId& f, int len) {
  const int beta = is31(f) ? 3 : 2;
  std::vector<Rat> s(len);
  for (long k = 0; k < len; ++k)
    s[k] = make_rat(factorial(beta * k), factorial((beta - 1) * k + 1) * factorial(k));
  if (is31(f)) {
    for (auto& v : s) v *= 2;
    s[0] -= 3;
  }
  return s;
}

}  // namespace

std::vector<Poly> pqr(const FamilyId& f, long n) {
  require_weight_family(f);
  const Poly x = Poly::x();
  if (is31(f)) {
    const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
    Poly p = -8 * (4 * n + 3) * (4 * n + 5) * (x - 1);
    Poly q = 4 * (4 * n + 3) * (-27 * n2 - 93 * n - 75 + (27 * n2 + 81 * n + 60) * x + (8 * n + 10) * x * x);
    Poly r = -(-729 * n4 - 3564 * n3 - 6015 * n2 - 4236 * n - 1080 +
               (729 * n4 + 2916 * n3 + 3777 * n2 + 1722 * n + 180) * x + (432 * n3 + 1492 * n2 + 1676 * n + 600) * x * x);
    return {p, q, r};
  }
  return {Poly(1L), -(4 + 2 * n + x), 2 + 5 * n + 2 * n * n + 3 * x + 2 * n * x};
}

WeightSolution weight_nullspace(const FamilyId& f, int n) {
  require_weight_family(f);
  if (n < 1) throw std::invalid_argument("weights need n >= 1");
  WeightSolution w;
  w.family = f;
  w.n = n;
  const auto s = s_coeffs(f, 2 * n + 3);
  // unknowns C_0..C_{n+1}(Q0); equations: coefficient of y^r in s*Q0 vanishes, r = n+2..2n+2
  RatMatrix sys;
  for (int r = n + 2; r <= 2 * n + 2; ++r) {
    std::vector<Rat> row(n + 2, Rat(0));
    for (int j = 0; j <= n + 1; ++j)
      if (r - j >= 0) row[j] = s[r - j];
    sys.push_back(std::move(row));
  }
  auto basis = nullspace(sys);
  w.nullity = static_cast<int>(basis.size());
  if (w.nullity != 1)
    throw std::runtime_error("weight system for " + f.name() + " at n = " + std::to_string(n) + " has nullity " +
                             std::to_string(w.nullity));
  w.q0 = basis[0];
  size_t lead = 0;
  while (w.q0[lead] == 0) ++lead;
  Rat inv = 1 / w.q0[lead];
  for (auto& v : w.q0) v *= inv;

  w.q1.assign(n + 2, Rat(0));
  for (int r = 0; r <= n + 1; ++r)
    for (int j = 0; j <= r; ++j) w.q1[r] += s[r - j] * w.q0[j];

  const Poly x = Poly::x();
  auto Q0 = [&](int k) { return k >= 0 && k <= n + 1 ? w.q0[k] : Rat(0); };
  auto Q1 = [&](int k) { return k >= 0 && k <= n + 1 ? w.q1[k] : Rat(0); };
  for (int k = 0; k <= n + 2; ++k) {
    if (is31(f))
      w.q2.push_back((x - 3) * (4 * x - 3) * Q1(k - 1) - (x - 1) * Poly(Rat(27 * Q0(k - 1) - 4 * Q0(k))));
    else
      w.q2.push_back((x - 2) * Q1(k - 1) + Poly(Q0(k)) - 2 * x * Q0(k - 1));
  }
  for (int j = 0; j <= n + 2; ++j) w.weights.push_back(w.q2[n + 2 - j]);

  const Poly p = pqr(f, n)[0];
  w.scale = w.weights[n + 2].lead() / p.lead();
  return w;
}

bool weights_annihilate(const WeightSolution& w) {
  for (int i = 0; i <= w.n; ++i) {
    Poly s;
    for (int j = 0; j <= w.n + 2; ++j) s += w.weights[j] * a_poly(w.family, i + j);
    if (!s.is_zero()) return false;
  }
  return true;
}

bool top_weights_match(const WeightSolution& w) {
  auto v = pqr(w.family, w.n);
  return w.weights[w.n + 2] == w.scale * v[0] && w.weights[w.n + 1] == w.scale * v[1] &&
         w.weights[w.n] == w.scale * v[2];
}

bool ciden_check(const WeightSolution& w) {
  auto q = quartet(w.family, w.n);
  Poly r = w.weights[w.n + 2] * *q.N + w.weights[w.n + 1] * q.K + w.weights[w.n] * q.H;
  return r.is_zero();
}

bool csystem_check(const WeightSolution& w) {
  const Poly x = Poly::x();
  const long n = w.n;
  const Rat c0 = w.q0[0], c1 = w.q0[1], c2 = w.q0[2];
  const Rat d0 = w.q1[0], d1 = w.q1[1];
  const Poly& e0 = w.q2[0];
  const Poly& e1 = w.q2[1];
  const Poly& e2 = w.q2[2];
  if (is31(w.family)) {
    bool ok = d0 == -c0 && d1 == 2 * c0 - c1 && e0 == 4 * (x - 1) * c0 &&
              e1 == (x - 3) * (4 * x - 3) * d0 - 27 * (x - 1) * c0 + 4 * (x - 1) * c1 &&
              e2 == (x - 3) * (4 * x - 3) * d1 - 27 * (x - 1) * c1 + 4 * (x - 1) * c2;
    // the three point equations and the parametric solution
    const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
    const Rat lead = 8 * (3 + 4 * n) * (5 + 4 * n) * c2;
    ok = ok && lead + 6 * (5 + 4 * n) * (1 + 2 * n + 18 * n2) * c1 +
                       3 * (30 + 67 * n + 338 * n2 + 540 * n3 + 243 * n4) * c0 ==
                   0;
    ok = ok && lead + 12 * (5 + 4 * n) * (2 + 10 * n + 9 * n2) * c1 +
                       3 * (120 + 778 * n + 1445 * n2 + 1026 * n3 + 243 * n4) * c0 ==
                   0;
    ok = ok && lead + 12 * (5 + 4 * n) * (-4 + n + 9 * n2) * c1 +
                       3 * (-240 - 446 * n + 95 * n2 + 540 * n3 + 243 * n4) * c0 ==
                   0;
    const Rat alpha = c0 / (8 * (15 + 32 * n + 16 * n2));
    ok = ok && c1 == -12 * (1 + n) * (30 + 67 * n + 36 * n2) * alpha &&
         c2 == 3 * (50 * n + 343 * n2 + 540 * n3 + 243 * n4) * alpha;
    return ok;
  }
  bool ok = d0 == c0 && d1 == c1 + c0 && e0 == Poly(c0) && e1 == (x - 2) * d0 - 2 * x * c0 + Poly(c1) &&
            e2 == (x - 2) * d1 - 2 * x * c1 + Poly(c2);
  const Rat alpha = c0;
  ok = ok && c1 == -2 * (n + 1) * alpha && c2 == n * (2 * n + 1) * alpha;
  return ok;
}

std::vector<Poly> explicit_weights(const FamilyId& f, int n_) {
  require_weight_family(f);
  if (n_ < 1) throw std::invalid_argument("weights need n >= 1");
  const long n = n_;
  const Poly x = Poly::x();
  std::vector<Poly> w;
  if (!is31(f)) {
    for (long j = 0; j <= n + 2; ++j) {
      Rat sg = (n + j) % 2 ? Rat(-1) : Rat(1);
      Rat k0 = 2 * binom(n + j + 1, n - j + 1) + binom(n + j + 1, n - j + 2);
      Rat k1 = 2 * binom(n + j + 1, n - j) + binom(n + j + 1, n - j + 1);
      w.push_back(sg * (Poly(k0) + k1 * x));
    }
    return w;
  }
  auto F = [](long m) { return Rat(factorial(m)); };
  auto DF = [](long m) { return Rat(double_factorial(m)); };
  for (long j = 0; j <= n + 2; ++j) {
    Poly tot;
    for (long i = 0; i <= std::min(n + 1 - j, n / 2 + 1); ++i) {
      Rat u = 3 * pow_rat(Rat(2), i + 1) * ((4 * n + 3) * (4 * n + 5)) * binom(n, 2 * i) *
              binom(j + 2 * (n - i + 1) + 1, 2 * (n - i - j + 1) + 1) * F(2 * n - i + 2) * DF(4 * n - 2 * i + 5) *
              DF(6 * n + 7) /
              (Rat((2 * i + 1) * (3 * j + 1) * (3 * j + 2) * (2 * i - j - 2 * n - 3) * (2 * i - j - 2 * n - 2)) *
               F(2 * n + 1) * DF(4 * n + 5) * DF(6 * n - 4 * i + 7));
      long al = 3 * (9 * j * (j + 1) + 2) *
                (12 * i * i + 6 * (3 * j - 4 * n - 5) * i + 6 * (n + 1) * (2 * n + 3) - j * (18 * n + 19));
      long be = -3 * (3 * j + 2) *
                (24 * i * i * i + 8 * (12 * j - 9 * n - 8) * i * i +
                 2 * (36 * n * n - 96 * j * n + 64 * n + 9 * j * (5 * j - 11) + 23) * i -
                 2 * (n + 1) * (2 * n + 3) * (6 * n + 1) - j * j * (90 * n + 89) + 3 * j * (32 * n * n + 66 * n + 33));
      long ga = 2 * (2 * i + 2 * j - 2 * n - 3) * (i + j - n - 1) *
                (36 * i * i + 6 * (9 * j - 12 * n - 5) * i + 6 * n * (6 * n + 5) - 3 * j * (18 * n + 13) + 2);
      tot += u * (Poly(al) + be * x + ga * x * x);
    }
    for (long i = 0; i <= std::min(n + 2 - j, n / 2 + 1); ++i) {
      Rat v = 3 * pow_rat(Rat(2), i + 3) * ((2 * n - 2 * i - 2 * j + 5) * (4 * n + 3) * (4 * n + 5)) *
              binom(n + 1, 2 * i) * binom(j + 2 * (n - i + 2) + 1, 2 * (n - i - j + 2) + 1) * F(2 * n - i + 3) *
              DF(4 * n - 2 * i + 5) * DF(6 * n + 7) /
              (Rat((3 * j + 1) * (3 * j + 2) * (2 * i - j - 2 * n - 5) * (2 * i - j - 2 * n - 4) *
                   (2 * i - j - 2 * n - 3)) *
               F(2 * n + 2) * DF(4 * n + 5) * DF(6 * n - 4 * i + 9));
      long de = 3 * (9 * j * (j + 1) + 2) *
                (6 * i * i + 3 * (3 * j - 4 * n - 7) * i + 3 * (n + 2) * (2 * n + 3) - j * (9 * n + 14));
      long ep = -3 * (3 * j + 2) *
                (12 * i * i * i + (48 * j - 36 * n - 50) * i * i + (45 * j * j - 3 * (32 * n + 49) * j + 4 * (n + 1) * (9 * n + 16)) * i -
                 2 * (n + 2) * (2 * n + 3) * (3 * n + 2) - j * j * (45 * n + 67) + 3 * j * (n * (16 * n + 49) + 37));
      long th = 2 * (2 * i + 2 * j - 2 * n - 3) * (i + j - n - 2) *
                (18 * n * n - 9 * (4 * i + 3 * j) * n + 33 * n - 33 * j + 3 * i * (6 * i + 9 * j - 11) + 13);
      tot += v * (Poly(de) + ep * x + th * x * x);
    }
    w.push_back(tot);
  }
  return w;
}

WeightComparison compare_explicit_weights(const FamilyId& f, int n) {
  WeightComparison cmp;
  auto sol = weight_nullspace(f, n);
  auto ex = explicit_weights(f, n);
  int bad = -1;
  for (int j = 0; j <= n + 2 && bad < 0; ++j)
    if (sol.weights[j] != sol.scale * ex[j]) bad = j;
  cmp.match = bad < 0;
  cmp.detail = cmp.match ? "explicit weights equal nullspace weights / " + to_string(Rat(sol.scale))
                         : "first differing weight index j = " + std::to_string(bad);
  return cmp;
}

}  // namespace hankel
