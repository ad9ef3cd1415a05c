#pragma once

#include "core/diff_operator.hpp"
#include "core/lattice.hpp"
#include "core/model.hpp"
#include "core/power_series.hpp"
#include "core/rational_function.hpp"

#include "json.hpp"

#include <string_view>

namespace pfm {

using Json = nlohmann::json;

/// Parses text, reporting syntax errors as Error(parse) with line and column.
Json parse_json(std::string_view text);

Json to_json(const Rational& r);
Json to_json(const Integer& z);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// Bare list of coefficient strings.
Json to_json(const PowerSeries& f);
PowerSeries series_from_json(const Json& j);

/// {order, variable, coeffs}
Json to_json(const DiffOperator& op);
DiffOperator operator_from_json(const Json& j);

/// {numerator, denominator}
Json to_json(const RationalFunction& r);

/// {name, variables, factors, phi_ydegree}
Json to_json(const MonomialModel& m);
MonomialModel model_from_json(const Json& j);

Json to_json(const KernelGenerator& g);

}  // namespace pfm
