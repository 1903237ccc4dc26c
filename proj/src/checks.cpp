#include "hankel/checks.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hankel/closed_forms.hpp"
#include "hankel/gf.hpp"
#include "hankel/hankel.hpp"
#include "hankel/identity_lab.hpp"

namespace hankel {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::finding: return "finding";
  }
  return "?";
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string x = "symbolic";
};

using Runner = std::function<Outcome(const FamilyId&, int)>;

struct Entry {
  CheckInfo info;
  bool asserted = true;
  Runner run;
};

Outcome verdict(bool ok, std::string detail_if_bad, std::string x = "symbolic") {
  return {ok, ok ? "" : std::move(detail_if_bad), std::move(x)};
}

std::string residual_detail(const Poly& r) {
  return r.is_zero() ? "" : "residual degree " + std::to_string(r.degree());
}

const FamilyId f31 = FamilyId::binom(3, 1);
const FamilyId f21 = FamilyId::binom(2, 1);

std::vector<Entry> build() {
  std::vector<Entry> e;
  auto add = [&](std::string id, std::optional<FamilyId> fixed, int min_n, std::string summary, Runner run,
                 bool asserted = true, bool hidden = false) {
    e.push_back({CheckInfo{std::move(id), fixed, min_n, hidden, std::move(summary)}, asserted, std::move(run)});
  };

  add("dodgson", std::nullopt, 1, "H_{n-1}H_{n+1} = H_n N_n - H_n M_n - K_n^2",
      [](const FamilyId& f, int n) { return verdict(dodgson_check(f, n), "identity does not hold"); });
  add("degree", std::nullopt, 0, "deg H_n <= n", [](const FamilyId& f, int n) {
    int d = hankel_det(f, n).degree();
    return verdict(d <= n, "deg H_n = " + std::to_string(d));
  });
  add("degree-exact", std::nullopt, 0, "deg H_n == n", [](const FamilyId& f, int n) {
    int d = hankel_det(f, n).degree();
    return verdict(d == n, "deg H_n = " + std::to_string(d));
  });

  for (const auto& spec : ode_specs()) {
    const std::string id = spec.id;
    add(id, spec.family, 1, "ODE residual on H_n", [id](const FamilyId&, int n) {
      const auto& s = ode_spec(id);
      Poly r = ode_residual(s, n, hankel_det(s.family, n));
      return verdict(r.is_zero(), residual_detail(r));
    }, spec.asserted);
  }

  for (auto pid : all_product_formulas()) {
    auto t = product_target(pid);
    add(to_string(pid), t.family, 0, "product formula vs determinant at a point", [pid](const FamilyId&, int n) {
      auto t = product_target(pid);
      Rat want = hankel_det_at(t.family, n, t.x);
      Rat got = product_eval(pid, n);
      return verdict(want == got, "product " + to_string(got) + ", determinant " + to_string(want), to_string(t.x));
    });
  }
  add("second120", f31, 0, "x = 1 almost product equals the (3,2) product", [](const FamilyId&, int n) {
    Rat a = almost_product_at(AlmostProductId::AP31at1, n, Rat(1));
    Rat b = product_eval(ProductFormulaId::P32, n);
    return verdict(a == b, to_string(a) + " vs " + to_string(b), "1");
  });

  for (auto aid : all_almost_products()) {
    FamilyId fam = (aid == AlmostProductId::AP21 || aid == AlmostProductId::AP21at0 || aid == AlmostProductId::AP21at1)
                       ? f21
                       : f31;
    add(to_string(aid), fam, 0, "almost product vs determinant", [aid, fam](const FamilyId&, int n) {
      using A = AlmostProductId;
      if (aid == A::AP31 || aid == A::AP31alt || aid == A::AP21) {
        Poly got = almost_product_poly(aid, n);
        const Poly& want = hankel_det(fam, n);
        if (!(got == want)) return verdict(false, "symbolic mismatch: " + to_string(got));
        // substitute-then-sum against sum-then-substitute
        const Rat spot(5, 7);
        Rat pt = almost_product_at(aid, n, spot);
        return verdict(pt == got.eval(spot), "point evaluation at 5/7 disagrees");
      }
      const Rat x = (aid == A::AP31at0 || aid == A::AP21at0) ? Rat(0) : Rat(1);
      Rat got = almost_product_at(aid, n, x);
      Rat want = hankel_det_at(fam, n, x);
      if (aid == A::AP21at0 && got != 1) return verdict(false, "expected 1, got " + to_string(got), to_string(x));
      if (aid == A::AP21at1) {
        long e = static_cast<long>(n) * (n + 1) / 2;
        Rat sign(e % 2 ? -1 : 1);
        if (got != sign) return verdict(false, "expected " + to_string(sign) + ", got " + to_string(got), to_string(x));
      }
      return verdict(got == want, to_string(got) + " vs determinant " + to_string(want), to_string(x));
    });
  }

  add("3term31", f31, 2, "p_n H_n + q_n H_{n-1} + H_{n-2} = 0",
      [](const FamilyId&, int n) { return verdict(three_term_check(ThreeTermCase::C31, n), "recursion fails"); });
  add("3term21", f21, 2, "H_n = 2(1-x)H_{n-1} - H_{n-2}",
      [](const FamilyId&, int n) { return verdict(three_term_check(ThreeTermCase::C21, n), "recursion fails"); });
  add("recursion31at1", f31, 0, "x = 1 one-term recursion reproduces the (3,2) product", [](const FamilyId&, int n) {
    Rat a = recursion_31at1(n), b = product_eval(ProductFormulaId::P32, n);
    return verdict(a == b, to_string(a) + " vs " + to_string(b), "1");
  });
  add("chebyshev", f21, 0, "H_n^{(2,1)}(x) = U_n(1-x) - U_{n-1}(1-x)", [](const FamilyId&, int n) {
    auto r = chebyshev_jacobi_check(n);
    return verdict(r.chebyshev, "Chebyshev form differs");
  });
  add("jacobi", f21, 0, "Jacobi P^{(1/2,-1/2)} forms and the 2k+2-shift ODE", [](const FamilyId&, int n) {
    auto r = chebyshev_jacobi_check(n);
    std::string d;
    if (!r.jacobi_shift) d += "2k+2-shift determinant; ";
    if (!r.jacobi_21) d += "(2,1) at x-1; ";
    if (!r.de2np2ak) d += "shift ODE; ";
    return verdict(r.jacobi_shift && r.jacobi_21 && r.de2np2ak, d);
  });
  add("interlace", f31, 1, "real roots of H_n and H_{n+1} interlace",
      [](const FamilyId&, int n) { return verdict(interlace_check(n), "interlacing fails"); });

  auto identity_ids = all_identities();
  identity_ids.push_back(IdentityId::L1_30_printed);
  for (auto iid : identity_ids) {
    add(to_string(iid), identity_family(iid), 0, "sequence identity at index k", [iid](const FamilyId&, int k) {
      Poly r = identity_residual(iid, k);
      return verdict(r.is_zero(), residual_detail(r));
    }, iid != IdentityId::L1_30_printed);
  }

  auto relation_ids = all_relations();
  relation_ids.push_back(RelationId::R_21_first_printed);
  for (auto rid : relation_ids) {
    add(to_string(rid), relation_family(rid), 1, "determinant relation", [rid](const FamilyId&, int n) {
      auto rep = check_relation(rid, n);
      std::string d;
      for (int p : rep.failing_parts) d += (d.empty() ? "failing parts: " : ", ") + std::to_string(p);
      return verdict(rep.ok, d);
    }, rid != RelationId::R_21_first_printed);
  }

  add("matconv", std::nullopt, 0, "[c_{i+j}] = EA + AE^T and [c_{i+j-1}] = FA + AF^T", [](const FamilyId& f, int n) {
    auto r = check_matrix_convolution_identities(f, n);
    std::string d = std::string(r.e_ok ? "" : "E identity fails; ") + (r.f_ok ? "" : "F identity fails");
    return verdict(r.e_ok && r.f_ok, d);
  });
  add("trace-rules", std::nullopt, 1, "linear transformation trace rules", [](const FamilyId& f, int n) {
    std::string d;
    for (const auto& r : check_transform_rules(f, n))
      if (!r.ok) d += (d.empty() ? "" : ", ") + r.rule;
    return verdict(d.empty(), "failing rules: " + d);
  });

  add("weights-nullspace", std::nullopt, 1, "nullity 1, weights annihilate, top weights match p, q, r",
      [](const FamilyId& f, int n) {
        auto w = weight_nullspace(f, n);
        if (!weights_annihilate(w)) return verdict(false, "weights do not annihilate");
        return verdict(top_weights_match(w), "top weights not proportional to p, q, r");
      });
  add("weights-explicit", std::nullopt, 1, "explicit weights equal nullspace weights up to the scale",
      [](const FamilyId& f, int n) {
        auto c = compare_explicit_weights(f, n);
        return verdict(c.match, c.detail);
      });
  add("ciden", std::nullopt, 1, "w_{n+2} N + w_{n+1} K + w_n H = 0",
      [](const FamilyId& f, int n) { return verdict(ciden_check(weight_nullspace(f, n)), "quartet relation fails"); });
  add("csystem", std::nullopt, 1, "coefficient relations of Q0, Q1, Q2",
      [](const FamilyId& f, int n) { return verdict(csystem_check(weight_nullspace(f, n)), "coefficient relation fails"); });

  add("gf-equiv", std::nullopt, 0, "direct and closed generating forms agree to y^n", [](const FamilyId& f, int n) {
    auto closed = closed_form_for(f);
    if (!closed) throw std::invalid_argument("family " + f.name() + " has no closed generating form");
    auto r = gf_form_equiv(GfForm::Direct, *closed, f, n);
    return verdict(r.equal, r.detail);
  });
  add("gf-coeff", std::nullopt, 0, "coefficient of y^n in each form equals a_n", [](const FamilyId& f, int n) {
    const Poly& a = a_poly(f, n);
    if (!(f_series(GfForm::Direct, f, n)[n] == a)) return verdict(false, "direct form differs");
    if (auto closed = closed_form_for(f))
      if (!(f_series(*closed, f, n)[n] == a)) return verdict(false, to_string(*closed) + " form differs");
    return verdict(true, "");
  });

  add("fixture-fail", std::nullopt, 0, "always fails",
      [](const FamilyId&, int) { return verdict(false, "injected failure"); }, true, true);
  add("fixture-finding", std::nullopt, 0, "always a finding",
      [](const FamilyId&, int) { return verdict(false, "injected finding"); }, false, true);
  return e;
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> m = [] {
    std::map<std::string, Entry> out;
    for (auto& e : build()) out.emplace(e.info.id, e);
    return out;
  }();
  return m;
}

const Entry& entry(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown check id: " + id);
  return it->second;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> v = [] {
    std::vector<CheckInfo> out;
    for (const auto& [id, e] : registry()) out.push_back(e.info);
    return out;
  }();
  return v;
}

const CheckInfo& check_info(const std::string& id) { return entry(id).info; }

FamilyId resolve_family(const CheckInfo& info, const std::optional<FamilyId>& requested) {
  if (info.fixed_family) {
    if (requested && *requested != *info.fixed_family)
      throw std::invalid_argument("check " + info.id + " runs on family " + info.fixed_family->name() + " only");
    return *info.fixed_family;
  }
  return requested.value_or(f31);
}

Row run_check(const std::string& id, const std::optional<FamilyId>& family, int n) {
  const Entry& e = entry(id);
  const FamilyId f = resolve_family(e.info, family);
  if (n < e.info.min_n)
    throw std::invalid_argument("check " + id + " needs n >= " + std::to_string(e.info.min_n));
  Row row;
  row.check = id;
  row.family = f.name();
  row.n = n;
  try {
    Outcome o = e.run(f, n);
    row.x = o.x;
    row.detail = o.detail;
    row.status = o.ok ? Status::pass : (e.asserted ? Status::fail : Status::finding);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& ex) {
    row.status = e.asserted ? Status::fail : Status::finding;
    row.detail = std::string("exception: ") + ex.what();
  }
  return row;
}

std::vector<Row> run_checks(const std::vector<std::string>& ids, const std::optional<FamilyId>& family, int n_lo,
                            int n_hi) {
  std::vector<std::pair<std::string, int>> work;
  for (const auto& id : ids) {
    const auto& info = check_info(id);
    resolve_family(info, family);
    for (int n = std::max(n_lo, info.min_n); n <= n_hi; ++n) work.emplace_back(id, n);
  }
  if (work.empty()) throw std::invalid_argument("the n-range selects no index for the requested checks");
  // big n first so the tail of the schedule is short
  std::stable_sort(work.begin(), work.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

  std::vector<Row> rows(work.size());
  std::string usage_error;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(work.size()); ++i) {
    try {
      rows[i] = run_check(work[i].first, family, work[i].second);
    } catch (const std::invalid_argument& ex) {
#pragma omp critical(hankel_checks_usage)
      if (usage_error.empty()) usage_error = ex.what();
    }
  }
  if (!usage_error.empty()) throw std::invalid_argument(usage_error);
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.check, a.family, a.n) < std::tie(b.check, b.family, b.n);
  });
  return rows;
}

bool any_failure(const std::vector<Row>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.status == Status::fail; });
}

Json to_json(const Row& r) {
  return Json{{"check", r.check}, {"family", r.family}, {"n", r.n},
              {"x", r.x},         {"status", to_string(r.status)}, {"detail", r.detail}};
}

std::string csv_header() { return "check,family,n,x,status,detail"; }

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_csv(const Row& r) {
  return csv_field(r.check) + "," + csv_field(r.family) + "," + std::to_string(r.n) + "," + csv_field(r.x) + "," +
         to_string(r.status) + "," + csv_field(r.detail);
}

std::string to_text(const Row& r) {
  std::string s = r.check + " [" + r.family + "] n=" + std::to_string(r.n);
  if (r.x != "symbolic") s += " x=" + r.x;
  s += std::string(": ") + to_string(r.status);
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  return s;
}

}  // namespace hankel
