#include <doctest.h>

#include "liecomp/verify.hpp"

using namespace liecomp;

namespace {

CaseSpec spec(const std::string& id, FieldSpec f, Index m) {
    CaseSpec c;
    c.id = id;
    c.field = f;
    c.m = m;
    return c;
}

}  // namespace

TEST_CASE("grid runner") {
    CHECK(run_all({}).empty());
    const auto rs = run_all({spec("sl-series", FieldSpec::prime(5), 3)});
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].pass());
    CHECK_THROWS_AS(run_case(spec("nope", FieldSpec::prime(5), 3)), std::invalid_argument);
    const auto bad = run_all({spec("thm1.1", FieldSpec::prime(2), 7)});
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].pass());
}

TEST_CASE("hypotheses are enforced") {
    CHECK_THROWS_AS(run_case(spec("thm1.1", FieldSpec::prime(3), 4)), HypothesisError);
    CHECK_THROWS_AS(run_case(spec("thm1.3", FieldSpec::prime(2), 4)), HypothesisError);
    CHECK_THROWS_AS(run_case(spec("thm1.1", FieldSpec::prime(2), 5)), HypothesisError);
}

TEST_CASE("report JSON round trip") {
    const Report r = run_case(spec("thm1.3", FieldSpec::prime(5), 4));
    CHECK(r.pass());
    const std::string text = report_to_json(r);
    const Report back = report_from_json(text);
    CHECK(report_to_json(back) == text);
    CHECK(back.claims.size() == r.claims.size());
    for (const auto& c : r.claims) {
        CHECK(c.paper_ref.rfind("thm1.3/", 0) == 0);
        CHECK_FALSE(c.expected.empty());
    }
    CHECK_THROWS_AS(report_from_json("{\"case\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("not json"), std::invalid_argument);
}

TEST_CASE("text report") {
    const Report r = run_case(spec("sl-series", FieldSpec::rationals(), 3));
    const std::string t = report_to_text(r);
    CHECK(t.find("PASS") != std::string::npos);
    CHECK(t.find("sl(3) simple") != std::string::npos);
}
