#include "hankel/hankel.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "hankel/combinat.hpp"
#include "hankel/memo.hpp"

namespace hankel {

PolyMatrix layout_matrix(const FamilyId& f, int n, const std::vector<int>& cols) {
  if (n < 0) throw std::invalid_argument("matrix size index must be >= 0");
  PolyMatrix m(n + 1);
  for (int i = 0; i <= n; ++i) {
    m[i].reserve(cols.size());
    for (int c : cols) m[i].push_back(a_poly(f, i + c));
  }
  return m;
}

PolyMatrix hankel_matrix(const FamilyId& f, int n) { return layout_matrix(f, n, variant_columns(Variant::H, n)); }

namespace {

void check_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
}

// Moves a nonzero pivot into row k. Returns false when the column is zero below k.
template <class Row>
bool pivot(std::vector<Row>& m, size_t k, int& sign) {
  if (!m[k][k].is_zero()) return true;
  for (size_t r = k + 1; r < m.size(); ++r) {
    if (!m[r][k].is_zero()) {
      std::swap(m[k], m[r]);
      sign = -sign;
      return true;
    }
  }
  return false;
}

void bareiss_row(PolyMatrix& m, size_t k, size_t i, const Poly& prev) {
  const Poly& pk = m[k][k];
  const Poly& ik = m[i][k];
  for (size_t j = k + 1; j < m.size(); ++j) {
    Poly num = m[i][j] * pk - ik * m[k][j];
    try {
      m[i][j] = exact_div(num, prev);
    } catch (const std::logic_error& e) {
      throw std::logic_error("fraction-free step " + std::to_string(k) + " entry (" + std::to_string(i) + "," +
                             std::to_string(j) + "): " + e.what());
    }
  }
}

}  // namespace

Poly det_fraction_free_serial(PolyMatrix m) {
  check_square(m);
  const size_t n = m.size();
  if (n == 0) return Poly(1L);
  int sign = 1;
  Poly prev(1L);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) return Poly();
    for (size_t i = k + 1; i < n; ++i) bareiss_row(m, k, i, prev);
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly det_fraction_free(PolyMatrix m) {
  check_square(m);
  const size_t n = m.size();
  if (n == 0) return Poly(1L);
  int sign = 1;
  Poly prev(1L);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) return Poly();
    std::string failure;
    const long rows = static_cast<long>(n - k - 1);
#pragma omp parallel for schedule(dynamic) if (rows > 1)
    for (long r = 0; r < rows; ++r) {
      try {
        bareiss_row(m, k, k + 1 + static_cast<size_t>(r), prev);
      } catch (const std::exception& e) {
#pragma omp critical(hankel_det_failure)
        if (failure.empty()) failure = e.what();
      }
    }
    if (!failure.empty()) throw std::logic_error(failure);
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly det_cofactor(const PolyMatrix& m) {
  check_square(m);
  const size_t n = m.size();
  if (n == 0) return Poly(1L);
  if (n == 1) return m[0][0];
  Poly total;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (size_t r = 1; r < n; ++r)
      for (size_t j = 0; j < n; ++j)
        if (j != c) minor[r - 1].push_back(m[r][j]);
    Poly term = m[0][c] * det_cofactor(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

Rat det_rational(RatMatrix m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Rat(1);
  int sign = 1;
  Rat prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return Rat(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign < 0 ? Rat(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::H: return "H";
    case Variant::K: return "K";
    case Variant::M: return "M";
    case Variant::N: return "N";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "H") return Variant::H;
  if (s == "K") return Variant::K;
  if (s == "M") return Variant::M;
  if (s == "N") return Variant::N;
  throw std::invalid_argument("unknown determinant variant: " + s);
}

std::vector<int> variant_columns(Variant v, int n) {
  if (n < 0) throw std::invalid_argument("matrix size index must be >= 0");
  std::vector<int> cols;
  switch (v) {
    case Variant::H:
      for (int c = 0; c <= n; ++c) cols.push_back(c);
      break;
    case Variant::K:
      for (int c = 0; c < n; ++c) cols.push_back(c);
      cols.push_back(n + 1);
      break;
    case Variant::M:
      if (n < 1) throw std::invalid_argument("M_n needs n >= 1");
      for (int c = 0; c + 1 < n; ++c) cols.push_back(c);
      cols.push_back(n + 1);
      cols.push_back(n);
      break;
    case Variant::N:
      if (n < 1) throw std::invalid_argument("N_n needs n >= 1");
      for (int c = 0; c + 1 < n; ++c) cols.push_back(c);
      cols.push_back(n - 1);
      cols.push_back(n + 2);
      break;
  }
  return cols;
}

namespace {
MemoTable<std::tuple<FamilyId, int, int>, Poly>& det_table() {
  static MemoTable<std::tuple<FamilyId, int, int>, Poly> t;
  return t;
}
}  // namespace

const Poly& hankel_det(const FamilyId& f, int n, Variant v) {
  if (n < 0) throw std::invalid_argument("matrix size index must be >= 0");
  return det_table().get_or_make({f, n, static_cast<int>(v)},
                                 [&] { return det_fraction_free(layout_matrix(f, n, variant_columns(v, n))); });
}

Rat hankel_det_at(const FamilyId& f, int n, const Rat& x, Variant v) {
  auto cols = variant_columns(v, n);
  RatMatrix m(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int c : cols) m[i].push_back(a_poly(f, i + c).eval(x));
  return det_rational(std::move(m));
}

HankelQuartet quartet(const FamilyId& f, int n) {
  HankelQuartet q;
  q.family = f;
  q.n = n;
  q.H = hankel_det(f, n, Variant::H);
  q.K = hankel_det(f, n, Variant::K);
  if (n >= 1) {
    q.M = hankel_det(f, n, Variant::M);
    q.N = hankel_det(f, n, Variant::N);
  }
  return q;
}

bool dodgson_check(const FamilyId& f, int n) {
  if (n < 1) throw std::invalid_argument("Dodgson check needs n >= 1");
  auto q = quartet(f, n);
  Poly lhs = hankel_det(f, n - 1) * hankel_det(f, n + 1);
  Poly rhs = q.H * *q.N - q.H * *q.M - q.K * q.K;
  return lhs == rhs;
}

PolyMatrix degree_matrix(const DegreeInstance& inst) {
  const size_t n = inst.p.size();
  if (inst.q.size() != n || inst.alphas.size() != n || inst.betas.size() != n)
    throw std::invalid_argument("degree instance sequences differ in length");
  PolyMatrix m(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const long s = inst.p[i] + inst.q[j];
      std::vector<Rat> c(s >= 0 ? static_cast<size_t>(s) + 1 : 0);
      for (long mm = 0; mm <= s; ++mm) c[mm] = binom(Rat(inst.alphas[i] + inst.betas[j] + inst.gamma * mm), s - mm);
      m[i][j] = Poly(std::move(c));
    }
  return m;
}

Poly general_degree_det(const DegreeInstance& inst) { return det_fraction_free(degree_matrix(inst)); }

int degree_bound(const DegreeInstance& inst) {
  if (inst.p.empty()) return 0;
  const int n = static_cast<int>(inst.p.size()) - 1;
  int b = *std::max_element(inst.p.begin(), inst.p.end()) + *std::max_element(inst.q.begin(), inst.q.end()) - n;
  return std::max(b, 0);
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(to_json(p));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hankel
