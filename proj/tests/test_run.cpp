#include "doctest.h"
#include "reference_operators.hpp"

#include "core/error.hpp"
#include "core/run.hpp"

using namespace pfm;
using namespace pfm::testing;

namespace {

Json piped(const RunConfig& c)
{
    Json doc = run_stage("period", c);
    // each hop goes through text, as it would through a shell pipe
    doc = run_stage("pf-fit", c, parse_json(doc.dump()));
    if (c.point == Point::infinity) doc = run_stage("pf-invert", c, parse_json(doc.dump()));
    doc = run_stage("mirror-map", c, parse_json(doc.dump()));
    doc = run_stage("yukawa", c, parse_json(doc.dump()));
    return run_stage("instantons", c, parse_json(doc.dump()));
}

std::vector<std::string> strings(const Json& arr, std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n && k < arr.size(); ++k) out.push_back(arr[k].get<std::string>());
    return out;
}

}  // namespace

TEST_CASE("options")
{
    const auto d = RunConfig::from_json(Json());
    CHECK(d.order == 25);
    CHECK(d.model.name == "pfaffian");
    CHECK(d.period_terms() == 40);
    CHECK(d.m == 7);

    const auto c = RunConfig::from_json(parse_json(
        R"({"model": "grassmannian", "point": "infinity", "order": 50, "m": "3/2", "oracle": true, "twist": 1})"));
    CHECK(c.model.name == "grassmannian");
    CHECK(c.point == Point::infinity);
    CHECK(c.period_terms() == 50);
    CHECK(c.m == Rational(3, 2));
    CHECK(c.oracle);

    CHECK_THROWS_AS(RunConfig::from_json(parse_json(R"({"ordr": 5})")), Error);
    CHECK_THROWS_AS(RunConfig::from_json(parse_json(R"({"order": 0})")), Error);
    CHECK_THROWS_AS(RunConfig::from_json(parse_json(R"({"model": "cubic"})")), Error);
    CHECK_THROWS_AS(RunConfig::from_json(parse_json(R"({"m": "0"})")), Error);
    CHECK_THROWS_AS(RunConfig::from_json(parse_json(R"({"model_text": "{"})")), Error);
    CHECK_THROWS_AS(RunConfig::from_json(parse_json("[1]")), Error);
}

TEST_CASE("pipeline at zero")
{
    const RunConfig c;
    const Json doc = run_pipeline(c);
    CHECK(checks_passed(doc));
    CHECK(doc["integrality"] == true);
    CHECK(doc["point"] == "zero");
    CHECK(operator_from_json(doc["operator"]) == reference_operator_zero());
    CHECK(strings(doc["period"], 5) == std::vector<std::string>{"1", "5", "109", "3317", "121501"});
    CHECK(strings(doc["g"], 3) == std::vector<std::string>{"0", "14", "287"});
    CHECK(strings(doc["mirror_map"], 4) == std::vector<std::string>{"0", "1", "14", "385"});
    CHECK(strings(doc["yukawa_q"], 5) == std::vector<std::string>{"3", "14", "714", "24584", "906122"});
    CHECK(doc["yukawa_phi"]["c1_constant"] == "3");
    const Json& inst = doc["instantons"];
    CHECK(inst["n0"] == "6");
    CHECK(strings(inst["nd"], 4) == std::vector<std::string>{"28", "175", "1820", "28294"});
    CHECK(inst["nd"].size() == 24);
    CHECK(inst["m_resolved"]["m"] == "7");
    CHECK(inst["m_resolved"]["n0"] == "42");
}

TEST_CASE("pipeline at infinity")
{
    RunConfig c;
    c.point = Point::infinity;
    const Json doc = run_pipeline(c);
    CHECK(checks_passed(doc));
    CHECK(doc["checks"]["infinity_normalization"] == true);
    CHECK(doc["checks"]["mum_infinity"] == true);
    CHECK(operator_from_json(doc["operator"]) == reference_operator_infinity());
    CHECK(strings(doc["yukawa_q"], 3) == std::vector<std::string>{"1", "42", "6958"});
    const Json& r = doc["instantons"]["m_resolved"];
    CHECK(r["n0"] == "14");
    CHECK(strings(r["nd"], 3) == std::vector<std::string>{"588", "12103", "583884"});
}

TEST_CASE("piped stages reproduce the pipeline byte for byte")
{
    for (const Point p : {Point::zero, Point::infinity}) {
        RunConfig c;
        c.point = p;
        CHECK(piped(c).dump(2) == run_pipeline(c).dump(2));
    }
}

TEST_CASE("families give the same document")
{
    RunConfig a;
    RunConfig b;
    b.model = grassmannian_model();
    for (const Point p : {Point::zero, Point::infinity}) {
        a.point = b.point = p;
        Json da = run_pipeline(a);
        Json db = run_pipeline(b);
        CHECK(db["model"] == "grassmannian");
        da.erase("model");
        db.erase("model");
        CHECK(da.dump() == db.dump());
    }
}

TEST_CASE("oracle check")
{
    RunConfig c;
    c.oracle = true;
    c.oracle_order = 5;
    c.period_order = 10;
    const Json doc = run_stage("period", c);
    CHECK(doc["checks"]["oracle_agrees"] == true);
    CHECK(doc["period"].size() == 10);
}

TEST_CASE("bare inputs")
{
    const RunConfig c;
    Json series = Json::array();
    for (std::size_t k = 0; k < 10; ++k) series.push_back("1");
    RunConfig small;
    small.operator_order = 1;
    small.deg = 1;
    const Json fitted = run_stage("pf-fit", small, series);
    CHECK(fitted["operator"]["coeffs"] == parse_json(R"([["0", "-1"], ["1", "-1"]])"));

    const Json inverted = run_stage("pf-invert", c, to_json(reference_operator_zero()));
    CHECK(operator_from_json(inverted["operator"]) == reference_operator_infinity());
    CHECK(inverted["point"] == "infinity");

    const Json inst = run_stage("instantons", c, parse_json(R"(["5"])"));
    CHECK(inst["instantons"]["n0"] == "5");
    CHECK(inst["instantons"]["nd"].empty());

    CHECK_THROWS_AS(run_stage("yukawa", c, series), Error);
    CHECK_THROWS_AS(run_stage("mirror-map", c, Json::object()), Error);
    CHECK_THROWS_AS(run_stage("pf-fit", c, Json("text")), Error);
    CHECK_THROWS_AS(run_stage("sing", c), Error);
}

TEST_CASE("stage errors carry the stage name")
{
    const RunConfig c;
    Json series = Json::array({"1", "5", "109"});
    try {
        run_stage("pf-fit", c, series);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition);
        CHECK(std::string(e.what()).rfind("pf-fit: ", 0) == 0);
    }
}

TEST_CASE("kernel stage")
{
    const RunConfig c;
    const Json doc = run_stage("kernel", c);
    CHECK(doc["generators"].size() == 6);
    CHECK(doc["kernel_basis"].size() == 6);
    CHECK(doc["uniform_ydegree"] == true);
    CHECK(checks_passed(doc));
    CHECK(doc["generators"][0]["product"] == "v[1,4] v[2,3] v[3,3]");
}

TEST_CASE("checks and text rendering")
{
    CHECK(checks_passed(Json::object()));
    CHECK_FALSE(checks_passed(parse_json(R"({"checks": {"a": true, "b": false}})")));

    const Json doc = run_pipeline(RunConfig());
    const auto text = render_text(doc);
    CHECK(text.find("model: pfaffian") != std::string::npos);
    CHECK(text.find("K(phi): (3 - phi) / (3 - 171*phi - 867*phi^2 + 3*phi^3)") != std::string::npos);
    CHECK(text.find("  n1  28 | 196") != std::string::npos);
    CHECK(text.find("FAILED") == std::string::npos);
    const auto ktext = render_text(run_stage("kernel", RunConfig()));
    CHECK(ktext.find("-  y^7  v[1,4] v[2,3] v[3,3]") != std::string::npos);
}
