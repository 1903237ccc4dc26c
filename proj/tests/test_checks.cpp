#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hankel/checks.hpp"

using namespace hankel;

TEST_CASE("catalog ids are unique and resolvable") {
  std::set<std::string> seen;
  for (const auto& c : check_catalog()) {
    CHECK(seen.insert(c.id).second);
    CHECK(check_info(c.id).id == c.id);
  }
  for (const char* id : {"dodgson", "degree", "de1", "fig4", "fig4-amended", "P32", "second120", "AP31", "3term31",
                         "chebyshev", "interlace", "L1_31", "R_det01", "matconv", "trace-rules", "weights-nullspace",
                         "weights-explicit", "ciden", "csystem", "gf-equiv", "gf-coeff", "fixture-fail"})
    CHECK(seen.count(id) == 1);
  CHECK_THROWS_AS(check_info("nope"), std::invalid_argument);
}

TEST_CASE("fixed-family checks refuse other families") {
  CHECK_THROWS_AS(run_check("de1", FamilyId::binom(2, 1), 2), std::invalid_argument);
  CHECK(run_check("de1", FamilyId::binom(3, 1), 2).status == Status::pass);
  CHECK(run_check("de1", std::nullopt, 2).family == "3,1");
  CHECK_THROWS_AS(run_check("dodgson", std::nullopt, 0), std::invalid_argument);
}

TEST_CASE("statuses") {
  CHECK(run_check("fixture-fail", std::nullopt, 0).status == Status::fail);
  CHECK(run_check("fixture-finding", std::nullopt, 0).status == Status::finding);
  CHECK(run_check("fig4", std::nullopt, 2).status == Status::finding);
  CHECK(run_check("L1_30-printed", std::nullopt, 0).status == Status::finding);
  CHECK(run_check("degree", FamilyId::aex(), 2).status == Status::fail);
  // incompatible family inside the check body is a usage error, not a failure row
  CHECK_THROWS_AS(run_check("gf-equiv", FamilyId::binom(4, 1), 3), std::invalid_argument);
  // the weight machinery is defined for (3,1) and (2,1) only
  CHECK_THROWS_AS(run_check("weights-nullspace", FamilyId::binom(3, 0), 2), std::invalid_argument);
}

TEST_CASE("run_checks sorts rows and reports failures") {
  auto rows = run_checks({"dodgson", "P31at3"}, std::nullopt, 0, 4);
  CHECK(rows.size() == 4 + 5);
  CHECK(rows.front().check == "P31at3");
  CHECK(rows.front().n == 0);
  CHECK(rows.back().check == "dodgson");
  CHECK(rows.back().n == 4);
  CHECK_FALSE(any_failure(rows));
  auto with_finding = run_checks({"fixture-finding"}, std::nullopt, 0, 2);
  CHECK_FALSE(any_failure(with_finding));
  CHECK(any_failure(run_checks({"fixture-fail", "fixture-finding"}, std::nullopt, 0, 0)));
  CHECK_THROWS_AS(run_checks({"interlace"}, std::nullopt, 0, 0), std::invalid_argument);
}

TEST_CASE("row serialization") {
  Row r{"P31at3", "3,1", 2, "3", Status::pass, "a, \"b\""};
  Json j = to_json(r);
  CHECK(j["check"] == "P31at3");
  CHECK(j["status"] == "pass");
  CHECK(j["x"] == "3");
  CHECK(csv_header() == "check,family,n,x,status,detail");
  CHECK(to_csv(r) == "P31at3,\"3,1\",2,3,pass,\"a, \"\"b\"\"\"");
  CHECK(to_text(r) == "P31at3 [3,1] n=2 x=3: pass (a, \"b\")");
}
