#pragma once

#include "core/json_io.hpp"
#include "core/mirror.hpp"
#include "core/model.hpp"
#include "core/period.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfm {

struct RunConfig {
    MonomialModel model = pfaffian_model();
    Point point = Point::zero;
    /// Length of every series downstream of the operator fit.
    std::size_t order = 25;
    /// Period length; defaults to max(order, what the fit needs).
    std::optional<std::size_t> period_order;
    std::size_t operator_order = 4;
    std::size_t deg = 5;
    bool oracle = false;
    std::size_t oracle_order = 4;
    Rational m = 7;
    PeriodMethod method = PeriodMethod::closed_form;
    long twist = 1;
    long degree_bound = 14;

    std::size_t period_terms() const;

    /// Keys: model, model_text, point, order, period_order, operator_order,
    /// deg, oracle, oracle_order, m, method, twist, degree_bound. Unknown
    /// keys are a schema error.
    static RunConfig from_json(const Json& options);
};

inline const std::vector<std::string> stage_names = {"kernel",     "period", "pf-fit",    "pf-invert",
                                                     "mirror-map", "yukawa", "instantons"};

/// Runs one stage on the document produced by earlier stages and returns
/// the extended document. `input` may also be a bare series (read as the
/// period by pf-fit, as kappa by instantons) or a bare operator.
Json run_stage(std::string_view stage, const RunConfig& config, const Json& input = Json());

/// period -> pf-fit -> [pf-invert] -> mirror-map -> yukawa -> instantons.
Json run_pipeline(const RunConfig& config);

/// Every entry under "checks" is true.
bool checks_passed(const Json& document);

std::string render_text(const Json& document);

}  // namespace pfm
