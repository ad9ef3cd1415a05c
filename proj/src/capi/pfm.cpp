#include "pfm/pfm.h"

#include "core/diff_operator.hpp"
#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/model.hpp"
#include "core/period.hpp"
#include "core/run.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct pfm_model {
    pfm::MonomialModel value;
};

struct pfm_series {
    pfm::PowerSeries value;
};

struct pfm_operator {
    pfm::DiffOperator value;
};

namespace {

thread_local std::string last_error;

pfm_status status_of(pfm::ErrorCode code)
{
    switch (code) {
    case pfm::ErrorCode::invalid_argument: return PFM_ERR_INVALID_ARGUMENT;
    case pfm::ErrorCode::precondition: return PFM_ERR_PRECONDITION;
    case pfm::ErrorCode::no_solution: return PFM_ERR_NO_SOLUTION;
    case pfm::ErrorCode::underdetermined: return PFM_ERR_UNDERDETERMINED;
    case pfm::ErrorCode::parse: return PFM_ERR_PARSE;
    case pfm::ErrorCode::schema: return PFM_ERR_SCHEMA;
    case pfm::ErrorCode::invariant: return PFM_ERR_INVARIANT;
    }
    return PFM_ERR_INTERNAL;
}

template <class F>
pfm_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return PFM_OK;
    } catch (const pfm::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown failure";
    }
    return PFM_ERR_INTERNAL;
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void check_args(bool ok)
{
    if (!ok) pfm::fail(pfm::ErrorCode::invalid_argument, "null argument");
}

pfm::Json parse_optional(const char* text)
{
    return text ? pfm::parse_json(text) : pfm::Json();
}

}  // namespace

extern "C" {

const char* pfm_last_error(void)
{
    return last_error.c_str();
}

const char* pfm_status_name(pfm_status status)
{
    switch (status) {
    case PFM_OK: return "ok";
    case PFM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PFM_ERR_PRECONDITION: return "precondition violated";
    case PFM_ERR_NO_SOLUTION: return "no solution";
    case PFM_ERR_UNDERDETERMINED: return "underdetermined";
    case PFM_ERR_PARSE: return "parse error";
    case PFM_ERR_SCHEMA: return "schema error";
    case PFM_ERR_INVARIANT: return "invariant violated";
    case PFM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pfm_version(void)
{
    return "1.0.0";
}

void pfm_string_free(char* s)
{
    std::free(s);
}

pfm_status pfm_model_preset(const char* name, pfm_model** out)
{
    return guarded([&] {
        check_args(name && out);
        *out = new pfm_model{pfm::preset_model(name)};
    });
}

pfm_status pfm_model_from_json(const char* text, pfm_model** out)
{
    return guarded([&] {
        check_args(text && out);
        *out = new pfm_model{pfm::model_from_json(pfm::parse_json(text))};
    });
}

pfm_status pfm_model_to_json(const pfm_model* model, char** out)
{
    return guarded([&] {
        check_args(model && out);
        *out = dup(pfm::to_json(model->value).dump());
    });
}

void pfm_model_free(pfm_model* model)
{
    delete model;
}

pfm_status pfm_period(const pfm_model* model, size_t order, pfm_period_method method, pfm_series** out)
{
    return guarded([&] {
        check_args(model && out);
        const auto m = method == PFM_PERIOD_ENUMERATION ? pfm::PeriodMethod::enumeration : pfm::PeriodMethod::closed_form;
        *out = new pfm_series{pfm::compute_period(model->value, order, m).series};
    });
}

pfm_status pfm_series_from_json(const char* text, pfm_series** out)
{
    return guarded([&] {
        check_args(text && out);
        *out = new pfm_series{pfm::series_from_json(pfm::parse_json(text))};
    });
}

pfm_status pfm_series_to_json(const pfm_series* series, char** out)
{
    return guarded([&] {
        check_args(series && out);
        *out = dup(pfm::to_json(series->value).dump());
    });
}

size_t pfm_series_order(const pfm_series* series)
{
    return series ? series->value.order() : 0;
}

pfm_status pfm_series_coeff(const pfm_series* series, size_t k, char** out)
{
    return guarded([&] {
        check_args(series && out);
        if (k >= series->value.order()) pfm::fail(pfm::ErrorCode::invalid_argument, "coefficient index out of range");
        *out = dup(pfm::to_string(series->value[k]));
    });
}

void pfm_series_free(pfm_series* series)
{
    delete series;
}

pfm_status pfm_fit_operator(const pfm_series* series, size_t order, size_t max_deg, pfm_operator** out)
{
    return guarded([&] {
        check_args(series && out);
        *out = new pfm_operator{pfm::fit_operator(series->value, order, max_deg)};
    });
}

pfm_status pfm_operator_invert(const pfm_operator* op, long twist, pfm_operator** out)
{
    return guarded([&] {
        check_args(op && out);
        *out = new pfm_operator{pfm::invert_coordinate(op->value, twist)};
    });
}

pfm_status pfm_operator_apply(const pfm_operator* op, const pfm_series* series, pfm_series** out)
{
    return guarded([&] {
        check_args(op && series && out);
        *out = new pfm_series{pfm::apply(op->value, series->value)};
    });
}

pfm_status pfm_operator_is_mum(const pfm_operator* op, int* out)
{
    return guarded([&] {
        check_args(op && out);
        *out = pfm::is_mum(op->value) ? 1 : 0;
    });
}

pfm_status pfm_holomorphic_solution(const pfm_operator* op, size_t order, pfm_series** out)
{
    return guarded([&] {
        check_args(op && out);
        *out = new pfm_series{pfm::holomorphic_solution(op->value, order)};
    });
}

pfm_status pfm_operator_from_json(const char* text, pfm_operator** out)
{
    return guarded([&] {
        check_args(text && out);
        *out = new pfm_operator{pfm::operator_from_json(pfm::parse_json(text))};
    });
}

pfm_status pfm_operator_to_json(const pfm_operator* op, char** out)
{
    return guarded([&] {
        check_args(op && out);
        *out = dup(pfm::to_json(op->value).dump());
    });
}

pfm_status pfm_operator_to_text(const pfm_operator* op, char** out)
{
    return guarded([&] {
        check_args(op && out);
        *out = dup(op->value.to_text());
    });
}

void pfm_operator_free(pfm_operator* op)
{
    delete op;
}

pfm_status pfm_stage(const char* stage, const char* options_json, const char* input_json, char** out_json,
                     int* checks_ok)
{
    return guarded([&] {
        check_args(stage && out_json);
        const auto config = pfm::RunConfig::from_json(parse_optional(options_json));
        const auto doc = pfm::run_stage(stage, config, parse_optional(input_json));
        if (checks_ok) *checks_ok = pfm::checks_passed(doc) ? 1 : 0;
        *out_json = dup(doc.dump(2));
    });
}

pfm_status pfm_pipeline(const char* options_json, char** out_json, int* checks_ok)
{
    return guarded([&] {
        check_args(out_json);
        const auto doc = pfm::run_pipeline(pfm::RunConfig::from_json(parse_optional(options_json)));
        if (checks_ok) *checks_ok = pfm::checks_passed(doc) ? 1 : 0;
        *out_json = dup(doc.dump(2));
    });
}

pfm_status pfm_render_text(const char* document_json, char** out_text)
{
    return guarded([&] {
        check_args(document_json && out_text);
        *out_text = dup(pfm::render_text(pfm::parse_json(document_json)));
    });
}

}  // extern "C"
