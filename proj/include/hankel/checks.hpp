#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/family.hpp"
#include "hankel/serialize.hpp"

namespace hankel {

// pass/fail assert; finding rows record a mismatch against a printed form and never fail a run.
enum class Status { pass, fail, finding };
const char* to_string(Status s);

struct Row {
  std::string check;
  std::string family;
  int n = 0;
  std::string x = "symbolic";
  Status status = Status::pass;
  std::string detail;
};

struct CheckInfo {
  std::string id;
  std::optional<FamilyId> fixed_family;  // checks tied to one family ignore --family
  int min_n = 0;
  bool hidden = false;
  std::string summary;
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo& check_info(const std::string& id);  // throws std::invalid_argument

// The family a check actually runs on. Throws std::invalid_argument when a fixed-family
// check is asked for a different family.
FamilyId resolve_family(const CheckInfo& info, const std::optional<FamilyId>& requested);

// One (id, n) row. Exceptions raised by the math become fail rows.
Row run_check(const std::string& id, const std::optional<FamilyId>& family, int n);

// Every (id, n) pair with n >= min_n, fanned out over OpenMP; rows come back sorted.
std::vector<Row> run_checks(const std::vector<std::string>& ids, const std::optional<FamilyId>& family, int n_lo,
                            int n_hi);

bool any_failure(const std::vector<Row>& rows);

Json to_json(const Row& r);
std::string csv_header();
std::string to_csv(const Row& r);
std::string to_text(const Row& r);

}  // namespace hankel
