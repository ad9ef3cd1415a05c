#include "doctest.h"

#include "pfm/pfm.h"

#include <string>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    pfm_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("model, series and operator handles")
{
    pfm_model* model = nullptr;
    REQUIRE(pfm_model_preset("pfaffian", &model) == PFM_OK);
    pfm_series* period = nullptr;
    REQUIRE(pfm_period(model, 40, PFM_PERIOD_CLOSED_FORM, &period) == PFM_OK);
    CHECK(pfm_series_order(period) == 40);
    char* c = nullptr;
    REQUIRE(pfm_series_coeff(period, 4, &c) == PFM_OK);
    CHECK(take(c) == "121501");
    CHECK(pfm_series_coeff(period, 40, &c) == PFM_ERR_INVALID_ARGUMENT);

    pfm_operator* op = nullptr;
    REQUIRE(pfm_fit_operator(period, 4, 5, &op) == PFM_OK);
    int mum = 0;
    CHECK(pfm_operator_is_mum(op, &mum) == PFM_OK);
    CHECK(mum == 1);

    pfm_series* residual = nullptr;
    REQUIRE(pfm_operator_apply(op, period, &residual) == PFM_OK);
    CHECK(pfm_series_order(residual) == 35);
    char* rj = nullptr;
    REQUIRE(pfm_series_to_json(residual, &rj) == PFM_OK);
    CHECK(take(rj).find("\"1\"") == std::string::npos);

    pfm_operator* inf = nullptr;
    REQUIRE(pfm_operator_invert(op, 1, &inf) == PFM_OK);
    char* text = nullptr;
    REQUIRE(pfm_operator_to_text(inf, &text) == PFM_OK);
    CHECK(take(text).find("(1 - 289*phi~ - 57*phi~^2 + phi~^3)*(3*phi~ - 1)^2 D^4") != std::string::npos);

    char* oj = nullptr;
    REQUIRE(pfm_operator_to_json(op, &oj) == PFM_OK);
    pfm_operator* again = nullptr;
    REQUIRE(pfm_operator_from_json(take(oj).c_str(), &again) == PFM_OK);
    pfm_series* f0 = nullptr;
    REQUIRE(pfm_holomorphic_solution(again, 6, &f0) == PFM_OK);
    char* fj = nullptr;
    REQUIRE(pfm_series_to_json(f0, &fj) == PFM_OK);
    CHECK(take(fj) == R"(["1","5","109","3317","121501","4954505"])");

    char* mj = nullptr;
    REQUIRE(pfm_model_to_json(model, &mj) == PFM_OK);
    pfm_model* copy = nullptr;
    CHECK(pfm_model_from_json(take(mj).c_str(), &copy) == PFM_OK);

    pfm_series_free(f0);
    pfm_operator_free(again);
    pfm_operator_free(inf);
    pfm_series_free(residual);
    pfm_operator_free(op);
    pfm_series_free(period);
    pfm_model_free(copy);
    pfm_model_free(model);
}

TEST_CASE("errors map to status codes")
{
    pfm_model* model = nullptr;
    CHECK(pfm_model_preset("quintic", &model) == PFM_ERR_INVALID_ARGUMENT);
    CHECK(std::string(pfm_last_error()).find("quintic") != std::string::npos);
    CHECK(pfm_model_from_json("{\"variables\": [", &model) == PFM_ERR_PARSE);
    CHECK(std::string(pfm_last_error()).find("line 1") != std::string::npos);
    CHECK(pfm_model_from_json("{}", &model) == PFM_ERR_SCHEMA);
    CHECK(pfm_model_preset(nullptr, &model) == PFM_ERR_INVALID_ARGUMENT);

    pfm_series* s = nullptr;
    REQUIRE(pfm_series_from_json("[\"1\", \"1\", \"1\"]", &s) == PFM_OK);
    pfm_operator* op = nullptr;
    CHECK(pfm_fit_operator(s, 4, 5, &op) == PFM_ERR_PRECONDITION);
    CHECK(op == nullptr);
    pfm_series_free(s);

    std::string thirteen = "[\"1\"";
    for (int k = 1; k < 13; ++k) thirteen += ", \"1\"";
    thirteen += "]";
    REQUIRE(pfm_series_from_json(thirteen.c_str(), &s) == PFM_OK);
    CHECK(pfm_fit_operator(s, 1, 2, &op) == PFM_ERR_UNDERDETERMINED);
    pfm_series_free(s);
    CHECK(std::string(pfm_status_name(PFM_ERR_NO_SOLUTION)) == "no solution");
    CHECK(std::string(pfm_version()) == "1.0.0");
    pfm_model_free(nullptr);
    pfm_series_free(nullptr);
    pfm_operator_free(nullptr);
}

TEST_CASE("document entry points")
{
    char* doc = nullptr;
    int ok = 0;
    REQUIRE(pfm_pipeline("{\"point\": \"infinity\"}", &doc, &ok) == PFM_OK);
    CHECK(ok == 1);
    const std::string pipeline = take(doc);
    CHECK(pipeline.find("\"588\"") != std::string::npos);

    char* step = nullptr;
    REQUIRE(pfm_stage("period", nullptr, nullptr, &step, &ok) == PFM_OK);
    std::string cur = take(step);
    for (const char* stage : {"pf-fit", "pf-invert", "mirror-map", "yukawa", "instantons"}) {
        REQUIRE(pfm_stage(stage, nullptr, cur.c_str(), &step, &ok) == PFM_OK);
        cur = take(step);
    }
    CHECK(cur == pipeline);

    char* text = nullptr;
    REQUIRE(pfm_render_text(cur.c_str(), &text) == PFM_OK);
    CHECK(take(text).find("point: infinity") != std::string::npos);

    CHECK(pfm_stage("period", "{\"order\": -1}", nullptr, &step, &ok) == PFM_ERR_SCHEMA);
    CHECK(pfm_stage("yukawa", nullptr, "{}", &step, &ok) == PFM_ERR_SCHEMA);
    CHECK(pfm_stage("period", "{", nullptr, &step, &ok) == PFM_ERR_PARSE);
    CHECK(pfm_pipeline(nullptr, nullptr, &ok) == PFM_ERR_INVALID_ARGUMENT);
}
