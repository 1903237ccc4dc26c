// Command-line front end: det, formula, verify, sweep, factor, series, report.
#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel/checks.hpp"
#include "hankel/closed_forms.hpp"
#include "hankel/factor.hpp"
#include "hankel/gf.hpp"
#include "hankel/hankel.hpp"

using namespace hankel;

namespace {

constexpr const char* kVersion = "hankel-1";

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    Range r;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
    if (r.lo < 0) throw std::invalid_argument("n must be >= 0");
    if (r.hi < r.lo) throw std::invalid_argument("empty n-range " + s);
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad n or n-range: " + s);
  }
}

std::optional<Rat> parse_point(const std::string& s) {
  if (s == "symbolic") return std::nullopt;
  return parse_rat(s);
}

// ---- JSON-lines cache of symbolic determinants; later lines override earlier ones.
class Cache {
 public:
  explicit Cache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        auto j = Json::parse(line);
        if (j.value("version", "") != kVersion) continue;
        entries_[key(j.at("family").get<std::string>(), j.at("n").get<int>(), j.at("variant").get<std::string>())] =
            poly_from_json(j.at("value"));
      } catch (const std::exception&) {
        // a torn or foreign line is skipped; the next write supersedes it
      }
    }
  }

  const Poly* find(const FamilyId& f, int n, Variant v) const {
    auto it = entries_.find(key(f.name(), n, to_string(v)));
    return it == entries_.end() ? nullptr : &it->second;
  }

  void put(const FamilyId& f, int n, Variant v, const Poly& p) {
    entries_[key(f.name(), n, to_string(v))] = p;
    std::ofstream out(path_, std::ios::app);
    Json j{{"family", f.name()}, {"n", n}, {"variant", to_string(v)}, {"value", to_json(p)}, {"version", kVersion}};
    out << j.dump() << "\n";
  }

 private:
  static std::string key(const std::string& f, int n, const std::string& v) {
    return f + "|" + std::to_string(n) + "|" + v;
  }
  std::string path_;
  std::map<std::string, Poly> entries_;
};

struct Common {
  std::string format = "text";
  std::string cache_path;
  bool no_cache = false;
  bool recheck = false;
  int jobs = 0;
};

std::optional<Cache> open_cache(const Common& c) {
  if (c.no_cache) return std::nullopt;
  std::string path = c.cache_path;
  if (path.empty())
    if (const char* env = std::getenv("HANKEL_CACHE")) path = env;
  if (path.empty()) return std::nullopt;
  return Cache(path);
}

void emit_rows(const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << csv_header() << "\n";
    for (const auto& r : rows) std::cout << to_csv(r) << "\n";
  } else {
    int pass = 0, fail = 0, finding = 0;
    for (const auto& r : rows) {
      std::cout << to_text(r) << "\n";
      (r.status == Status::pass ? pass : r.status == Status::fail ? fail : finding)++;
    }
    std::cout << pass << " pass, " << fail << " fail, " << finding << " finding\n";
  }
}

std::string bracket(const Poly& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? ", " : "") + to_string(p.coeffs()[i]);
  return s + (p.is_zero() ? "0]" : "]");
}

// ---- subcommands

int cmd_det(const Common& c, const std::string& family, const std::string& n_text, const std::string& x_text,
            const std::string& variant_text) {
  const FamilyId f = FamilyId::parse(family);
  const Range r = parse_range(n_text);
  const auto x = parse_point(x_text);
  const Variant v = parse_variant(variant_text);
  auto cache = open_cache(c);
  int status = kOk;
  Json out = Json::array();
  std::mt19937 rng(20240521);
  for (int n = r.lo; n <= r.hi; ++n) {
    Json row{{"family", f.name()}, {"n", n}, {"variant", to_string(v)}, {"x", x ? to_string(*x) : "symbolic"}};
    std::string text;
    if (x) {
      Rat val = hankel_det_at(f, n, *x, v);
      row["value"] = to_json(val);
      text = to_string(val);
    } else {
      const Poly* hit = cache ? cache->find(f, n, v) : nullptr;
      Poly val;
      if (hit) {
        val = *hit;
        if (c.recheck && !(det_fraction_free(layout_matrix(f, n, variant_columns(v, n))) == val)) {
          std::cerr << "cache entry for " << f.name() << " n=" << n << " " << to_string(v)
                    << " disagrees with recomputation\n";
          status = kFailure;
        }
      } else {
        val = hankel_det(f, n, v);
        if (cache) cache->put(f, n, v, val);
      }
      row["value"] = to_json(val);
      text = to_string(val);
    }
    out.push_back(row);
    if (c.format == "text") std::cout << (r.lo == r.hi ? text : "n=" + std::to_string(n) + ": " + text) << "\n";
    else if (c.format == "csv") {
      if (n == r.lo) std::cout << "family,n,variant,x,value\n";
      std::cout << "\"" << f.name() << "\"," << n << "," << to_string(v) << "," << row["x"].get<std::string>()
                << ",\"" << text << "\"\n";
    }
  }
  if (c.format == "json") std::cout << (r.lo == r.hi ? out[0] : out).dump(2) << "\n";
  return status;
}

int cmd_formula(const Common& c, const std::string& id, const std::string& n_text, const std::string& x_text) {
  const Range r = parse_range(n_text);
  const auto x = parse_point(x_text);
  std::optional<ProductFormulaId> pid;
  std::optional<AlmostProductId> aid;
  try {
    pid = parse_product_formula(id);
  } catch (const std::invalid_argument&) {
    aid = parse_almost_product(id);
  }
  Json out = Json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    std::string text;
    Json val;
    if (pid) {
      Rat v = product_eval(*pid, n);
      text = to_string(v);
      val = to_json(v);
    } else if (x) {
      Rat v = almost_product_at(*aid, n, *x);
      text = to_string(v);
      val = to_json(v);
    } else {
      Poly p = almost_product_poly(*aid, n);
      text = to_string(p);
      val = to_json(p);
    }
    out.push_back(Json{{"formula", id}, {"n", n}, {"value", val}});
    if (c.format == "json") continue;
    if (c.format == "csv") {
      if (n == r.lo) std::cout << "formula,n,value\n";
      std::cout << id << "," << n << ",\"" << text << "\"\n";
    } else {
      std::cout << (r.lo == r.hi ? text : "n=" + std::to_string(n) + ": " + text) << "\n";
    }
  }
  if (c.format == "json") std::cout << (r.lo == r.hi ? out[0] : out).dump(2) << "\n";
  return kOk;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& s : raw) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) ids.push_back(part);
  }
  return ids;
}

std::optional<FamilyId> optional_family(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return FamilyId::parse(s);
}

int cmd_verify(const Common& c, const std::vector<std::string>& raw_ids, const std::string& family,
               const std::string& n_text) {
  auto ids = split_ids(raw_ids);
  if (ids.empty()) throw std::invalid_argument("verify needs at least one --check id");
  const Range r = parse_range(n_text);
  auto rows = run_checks(ids, optional_family(family), r.lo, r.hi);
  emit_rows(rows, c.format);
  return any_failure(rows) ? kFailure : kOk;
}

// Every visible check that can run on the family.
int cmd_sweep(const Common& c, const std::string& family, const std::string& n_text) {
  const FamilyId f = FamilyId::parse(family.empty() ? "3,1" : family);
  const Range r = parse_range(n_text);
  std::vector<std::string> ids;
  for (const auto& info : check_catalog()) {
    if (info.hidden || r.hi < info.min_n) continue;
    if (info.fixed_family && *info.fixed_family != f) continue;
    if (!info.fixed_family && (info.id.rfind("weights", 0) == 0 || info.id == "ciden" || info.id == "csystem") &&
        !f.is_binom(3, 1) && !f.is_binom(2, 1))
      continue;
    if (info.id.rfind("gf-", 0) == 0 && !closed_form_for(f)) continue;
    ids.push_back(info.id);
  }
  auto rows = run_checks(ids, f, r.lo, r.hi);
  emit_rows(rows, c.format);
  return any_failure(rows) ? kFailure : kOk;
}

int cmd_factor(const Common& c, const std::string& family, const std::string& n_text, const std::string& x_text,
               unsigned long bound) {
  const FamilyId f = FamilyId::parse(family);
  const Range r = parse_range(n_text);
  const auto x = parse_point(x_text);
  if (!x) throw std::invalid_argument("factor needs a rational --x");
  if (bound < 2) throw std::invalid_argument("--bound must be >= 2");
  Json out = Json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    Rat v = hankel_det_at(f, n, *x);
    Json row{{"family", f.name()}, {"n", n}, {"x", to_string(*x)}, {"value", to_json(v)}};
    std::string text;
    if (v == 0) {
      text = "determinant is 0; nothing to factor";
    } else if (!is_integer(v)) {
      auto num = factor_smooth(v.get_num(), bound), den = factor_smooth(v.get_den(), bound);
      text = render(num) + " / " + render(den);
      row["numerator"] = render(num);
      row["denominator"] = render(den);
    } else {
      auto rep = factor_smooth(v.get_num(), bound);
      text = render(rep);
      row["factorization"] = text;
      row["cofactor"] = rep.cofactor.get_str();
      row["cofactor_kind"] = to_string(rep.cofactor_kind);
      if (rep.cofactor != 1) text += "\ncofactor " + rep.cofactor.get_str() + ": " + to_string(rep.cofactor_kind);
    }
    out.push_back(row);
    if (c.format == "json") continue;
    if (c.format == "csv") {
      if (n == r.lo) std::cout << "family,n,x,factorization\n";
      std::cout << "\"" << f.name() << "\"," << n << "," << to_string(*x) << ",\"" << row.value("factorization", text)
                << "\"\n";
    } else {
      std::cout << (r.lo == r.hi ? text : "n=" + std::to_string(n) + ": " + text) << "\n";
    }
  }
  if (c.format == "json") std::cout << (r.lo == r.hi ? out[0] : out).dump(2) << "\n";
  return kOk;
}

int cmd_series(const Common& c, bool t, bool tau, bool f_flag, int beta, int order, const std::string& family,
               const std::string& form_text) {
  if (int(t) + int(tau) + int(f_flag) != 1) throw std::invalid_argument("series needs exactly one of --t, --tau, --f");
  if (order < 0) throw std::invalid_argument("--order must be >= 0");
  if (order > 200) throw std::invalid_argument("--order is capped at 200");
  SeriesYX s;
  bool scalar = true;
  if (t) {
    if (beta < 1) throw std::invalid_argument("--beta must be >= 1");
    s = t_series(beta, order);
  } else if (tau) {
    s = tau_series(order);
  } else {
    const FamilyId f = FamilyId::parse(family.empty() ? "3,1" : family);
    GfForm form;
    if (form_text == "closed") {
      auto cf = closed_form_for(f);
      if (!cf) throw std::invalid_argument("family " + f.name() + " has no closed generating form");
      form = *cf;
    } else {
      form = parse_gf_form(form_text);
      if (!compatible(form, f)) throw std::invalid_argument(form_text + " does not apply to family " + f.name());
    }
    s = f_series(form, f, order);
    scalar = false;
  }
  if (c.format == "json") {
    std::cout << to_json(s).dump(2) << "\n";
    return kOk;
  }
  std::string line;
  for (int k = 0; k <= order; ++k) {
    if (k) line += ", ";
    line += scalar ? to_string(s[k].coeff(0)) : bracket(s[k]);
  }
  std::cout << line << "\n";
  return kOk;
}

// Every visible check over the core families, the whole n-range.
int cmd_report(const Common& c, const std::string& n_text) {
  const Range r = parse_range(n_text);
  std::vector<Row> all;
  for (const auto& f : core_families()) {
    std::vector<std::string> ids;
    for (const auto& info : check_catalog()) {
      if (info.hidden || info.fixed_family || r.hi < info.min_n) continue;
      if ((info.id.rfind("weights", 0) == 0 || info.id == "ciden" || info.id == "csystem") && !f.is_binom(3, 1) &&
          !f.is_binom(2, 1))
        continue;
      ids.push_back(info.id);
    }
    auto rows = run_checks(ids, f, r.lo, r.hi);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  std::vector<std::string> fixed;
  for (const auto& info : check_catalog())
    if (!info.hidden && info.fixed_family && r.hi >= info.min_n) fixed.push_back(info.id);
  auto rows = run_checks(fixed, std::nullopt, r.lo, r.hi);
  all.insert(all.end(), rows.begin(), rows.end());
  emit_rows(all, c.format);
  return any_failure(all) ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel determinants of binomial-polynomial sequences"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache", common.cache_path, "JSON-lines determinant cache (default: $HANKEL_CACHE)");
  app.add_flag("--no-cache", common.no_cache, "ignore any cache");
  app.add_flag("--recheck", common.recheck, "recompute cache hits and compare");
  app.add_option("--jobs", common.jobs, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  std::string family, n_text = "1", x_text = "symbolic", factor_x = "0", variant = "H", formula, form = "direct";
  std::vector<std::string> check_ids;
  unsigned long bound = 1000000;
  int beta = 3, order = 5;
  bool t = false, tau = false, f_flag = false;

  auto* det = app.add_subcommand("det", "evaluate H, K, M or N");
  det->add_option("--family", family)->required();
  det->add_option("--n", n_text, "n or A..B");
  det->add_option("--x", x_text, "symbolic or a rational");
  det->add_option("--variant", variant, "H, K, M or N");

  auto* fml = app.add_subcommand("formula", "evaluate a product or almost-product formula");
  fml->add_option("--id", formula)->required();
  fml->add_option("--n", n_text);
  fml->add_option("--x", x_text);

  auto* verify = app.add_subcommand("verify", "run named checks");
  verify->add_option("--check", check_ids, "check id (repeatable, or comma separated)")->required();
  verify->add_option("--family", family);
  verify->add_option("--n", n_text);

  auto* sweep = app.add_subcommand("sweep", "run every check that applies to a family");
  sweep->add_option("--family", family);
  sweep->add_option("--n", n_text);

  auto* factor = app.add_subcommand("factor", "factor a determinant value");
  factor->add_option("--family", family)->required();
  factor->add_option("--n", n_text);
  factor->add_option("--x", factor_x, "rational point (default 0)");
  factor->add_option("--bound", bound, "trial-division bound");

  auto* series = app.add_subcommand("series", "print t, tau or f series coefficients");
  series->add_flag("--t", t);
  series->add_flag("--tau", tau);
  series->add_flag("--f", f_flag);
  series->add_option("--beta", beta);
  series->add_option("--order", order);
  series->add_option("--family", family);
  series->add_option("--form", form, "direct, closed or a closed form name");

  auto* report = app.add_subcommand("report", "every check over the core families");
  report->add_option("--n", n_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (common.jobs > 0) omp_set_num_threads(common.jobs);

  try {
    if (*det) return cmd_det(common, family, n_text, x_text, variant);
    if (*fml) return cmd_formula(common, formula, n_text, x_text);
    if (*verify) return cmd_verify(common, check_ids, family, n_text);
    if (*sweep) return cmd_sweep(common, family, n_text);
    if (*factor) return cmd_factor(common, family, n_text, factor_x, bound);
    if (*series) return cmd_series(common, t, tau, f_flag, beta, order, family, form);
    if (*report) return cmd_report(common, n_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
