#include "doctest.h"

#include <stdexcept>

#include "twistdive/plan_io.hpp"
#include "twistdive/sym_planner.hpp"

using namespace twistdive;

namespace {

PlanDocument solved_document() {
  DiveRequest req;
  req.m = 1.5;
  req.n = 2.0;
  req.T_tot = 1.5;
  req.body.I1 = 20.0;
  req.body.I2 = 20.0;
  req.body.I3 = 1.0;
  req.body.l = 127.4;
  return make_plan_document(req, plan_dive(req));
}

}  // namespace

TEST_SUITE("plan_io") {
  TEST_CASE("round trip is lossless") {
    const PlanDocument doc = solved_document();
    const std::string text = plan_document_to_json(doc);
    const PlanDocument back = plan_document_from_json(text);

    CHECK(back.schema_version == 1);
    CHECK(back.request.m == doc.request.m);
    CHECK(back.request.body.I2 == doc.request.body.I2);
    CHECK(back.plan.s == doc.plan.s);                    // bit-exact through JSON
    CHECK(back.plan.That1 == doc.plan.That1);
    CHECK(back.plan.That_tot == doc.plan.That_tot);
    CHECK(back.plan.T3 == doc.plan.T3);
    CHECK(back.plan.h == doc.plan.h);
    CHECK(back.plan.rho == doc.plan.rho);
    CHECK(back.plan.twist_period == doc.plan.twist_period);
    CHECK(back.plan.terminal_sign == doc.plan.terminal_sign);
    CHECK(back.plan.feasible == doc.plan.feasible);
    CHECK(back.plan.general == doc.plan.general);
    CHECK(back.plan.warnings == doc.plan.warnings);

    // Serialize again: byte-identical.
    CHECK(plan_document_to_json(back) == text);
  }

  TEST_CASE("serialization is deterministic") {
    const PlanDocument doc = solved_document();
    CHECK(plan_document_to_json(doc) == plan_document_to_json(doc));
    CHECK(plan_document_to_json(doc).find("\"schema_version\": 1") != std::string::npos);
  }

  TEST_CASE("infeasible plans carry their reason through") {
    DiveRequest req;
    req.m = 1.5;
    req.n = 2.0;
    req.T_tot = 1.5;
    req.body.I1 = 20.0;
    req.body.I2 = 20.0;
    req.body.I3 = 1.0;
    req.body.l = 125.0;
    const DivePlan plan = plan_dive(req);
    REQUIRE_FALSE(plan.feasible);
    const PlanDocument back =
        plan_document_from_json(plan_document_to_json(make_plan_document(req, plan)));
    CHECK_FALSE(back.plan.feasible);
    CHECK(back.plan.reason == plan.reason);
  }

  TEST_CASE("malformed documents throw") {
    CHECK_THROWS_AS(plan_document_from_json("not json at all"), std::invalid_argument);
    CHECK_THROWS_AS(plan_document_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(plan_document_from_json("{\"schema_version\": 7}"), std::invalid_argument);

    const std::string text = plan_document_to_json(solved_document());
    CHECK_THROWS_AS(plan_document_from_json(text.substr(0, text.size() / 2)),
                    std::invalid_argument);

    // A required key renamed away.
    std::string missing = text;
    const auto pos = missing.find("\"s_minus\"");
    missing.replace(pos, 9, "\"s_minos\"");
    CHECK_THROWS_AS(plan_document_from_json(missing), std::invalid_argument);
  }
}
