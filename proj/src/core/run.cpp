#include "core/run.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pfm {

std::size_t RunConfig::period_terms() const
{
    if (period_order) return *period_order;
    return std::max(order, fit_series_length(operator_order, deg));
}

namespace {

std::size_t size_option(const Json& j, const char* key)
{
    if (!j.is_number_integer() || j.get<long long>() < 1)
        fail(ErrorCode::schema, std::string("option \"") + key + "\" must be a positive integer");
    return j.get<std::size_t>();
}

}  // namespace

RunConfig RunConfig::from_json(const Json& options)
{
    RunConfig c;
    if (options.is_null()) return c;
    if (!options.is_object()) fail(ErrorCode::schema, "options must be a JSON object");
    static const std::set<std::string> known = {"model",  "model_text",   "point", "order",
                                                "period_order", "operator_order", "deg",  "oracle",
                                                "oracle_order", "m",            "method", "twist",
                                                "degree_bound"};
    for (const auto& [key, value] : options.items())
        if (!known.count(key)) fail(ErrorCode::schema, "unknown option \"" + key + "\"");

    if (options.contains("model_text")) {
        const Json& t = options["model_text"];
        if (!t.is_string()) fail(ErrorCode::schema, "option \"model_text\" must be a string");
        c.model = model_from_json(parse_json(t.get<std::string>()));
    } else if (options.contains("model")) {
        const Json& n = options["model"];
        if (!n.is_string()) fail(ErrorCode::schema, "option \"model\" must be a string");
        c.model = preset_model(n.get<std::string>());
    }
    if (options.contains("point")) {
        if (!options["point"].is_string()) fail(ErrorCode::schema, "option \"point\" must be a string");
        c.point = parse_point(options["point"].get<std::string>());
    }
    if (options.contains("order")) c.order = size_option(options["order"], "order");
    if (options.contains("period_order")) c.period_order = size_option(options["period_order"], "period_order");
    if (options.contains("operator_order")) c.operator_order = size_option(options["operator_order"], "operator_order");
    if (options.contains("deg")) {
        const Json& d = options["deg"];
        if (!d.is_number_integer() || d.get<long long>() < 0)
            fail(ErrorCode::schema, "option \"deg\" must be a non-negative integer");
        c.deg = d.get<std::size_t>();
    }
    if (options.contains("oracle")) {
        if (!options["oracle"].is_boolean()) fail(ErrorCode::schema, "option \"oracle\" must be a boolean");
        c.oracle = options["oracle"].get<bool>();
    }
    if (options.contains("oracle_order")) c.oracle_order = size_option(options["oracle_order"], "oracle_order");
    if (options.contains("m")) {
        c.m = rational_from_json(options["m"]);
        if (c.m <= 0) fail(ErrorCode::invalid_argument, "m must be positive");
    }
    if (options.contains("method")) {
        if (!options["method"].is_string()) fail(ErrorCode::schema, "option \"method\" must be a string");
        c.method = parse_period_method(options["method"].get<std::string>());
    }
    if (options.contains("twist")) {
        if (!options["twist"].is_number_integer()) fail(ErrorCode::schema, "option \"twist\" must be an integer");
        c.twist = options["twist"].get<long>();
    }
    if (options.contains("degree_bound")) c.degree_bound = static_cast<long>(size_option(options["degree_bound"], "degree_bound"));
    return c;
}

namespace {

std::string product_label(const MonomialModel& model, const LatticeVector& b)
{
    std::string out;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        if (!out.empty()) out += " ";
        out += model.label(j);
        if (b[j] > 1) out += "^" + std::to_string(b[j]);
    }
    return out;
}

Json stage_kernel(const RunConfig& c)
{
    const ExponentMatrix a = c.model.exponent_matrix();
    Json rows = Json::array();
    for (std::size_t j = 0; j < a.monomials(); ++j)
        rows.push_back({{"label", c.model.label(j)},
                        {"sign", a.signs[j]},
                        {"ydeg", a.ygrades[j]},
                        {"exponents", a.entries[j]}});

    const auto basis = integer_kernel_basis(a);
    const auto gens = nonneg_kernel_generators(a, c.degree_bound);
    Json gj = Json::array();
    bool in_kernel = true;
    bool uniform = true;
    for (const auto& g : gens) {
        Json e = to_json(g);
        e["product"] = product_label(c.model, g.exponents);
        gj.push_back(e);
        const auto x = x_exponents(a, g.exponents);
        in_kernel = in_kernel && std::all_of(x.begin(), x.end(), [](long v) { return v == 0; }) &&
                    std::all_of(g.exponents.begin(), g.exponents.end(), [](long v) { return v >= 0; });
        uniform = uniform && g.ydegree == c.model.phi_ydegree;
    }
    Json doc;
    doc["model"] = c.model.name;
    doc["variables"] = c.model.variables;
    doc["exponent_matrix"] = rows;
    doc["kernel_basis"] = basis;
    doc["degree_bound"] = c.degree_bound;
    doc["generators"] = gj;
    doc["checks"] = {{"generators_in_kernel", in_kernel}};
    doc["uniform_ydegree"] = uniform;
    return doc;
}

void set_check(Json& doc, const std::string& name, bool ok)
{
    doc["checks"][name] = ok;
}

Json stage_period(const RunConfig& c, Json doc)
{
    const std::size_t n = c.period_terms();
    const PeriodSeries p = compute_period(c.model, n, c.method);
    doc["model"] = c.model.name;
    doc["method"] = to_string(p.method);
    doc["period"] = to_json(p.series);
    set_check(doc, "period_positive_integral", is_positive_integral(p.series));
    if (c.oracle) {
        const std::size_t k = std::min(c.oracle_order, n);
        const PeriodSeries e = period_enumeration(c.model, k);
        set_check(doc, "oracle_agrees", e.series == p.series.truncated(k));
        doc["oracle_order"] = k;
    }
    return doc;
}

const Json& need(const Json& doc, const char* key, std::string_view stage)
{
    if (!doc.is_object() || !doc.contains(key))
        fail(ErrorCode::schema, "input to " + std::string(stage) + " lacks \"" + key + "\"");
    return doc[key];
}

Point doc_point(const Json& doc, const RunConfig& c)
{
    if (doc.contains("point")) return parse_point(doc["point"].get<std::string>());
    return c.point;
}

Json stage_fit(const RunConfig& c, Json doc)
{
    const PowerSeries f = series_from_json(need(doc, "period", "pf-fit"));
    const DiffOperator op = fit_operator(f, c.operator_order, c.deg);
    doc["point"] = to_string(Point::zero);
    doc["operator"] = to_json(op);
    set_check(doc, "fit_annihilates", is_zero(apply(op, f)));
    set_check(doc, "mum_zero", is_mum(op));
    return doc;
}

Json stage_invert(const RunConfig& c, Json doc)
{
    const DiffOperator op = operator_from_json(need(doc, "operator", "pf-invert"));
    const DiffOperator inv = invert_coordinate(op, c.twist);
    const Point from = doc_point(doc, c);
    doc["point"] = to_string(from == Point::zero ? Point::infinity : Point::zero);
    doc["twist"] = c.twist;
    doc["operator"] = to_json(inv);
    set_check(doc, "involution", invert_coordinate(inv, c.twist) == op);
    set_check(doc, from == Point::zero ? "mum_infinity" : "mum_zero", is_mum(inv));
    return doc;
}

Json stage_mirror(const RunConfig& c, Json doc)
{
    const DiffOperator op = operator_from_json(need(doc, "operator", "mirror-map"));
    const PowerSeries f0 = holomorphic_solution(op, c.order);
    if (doc_point(doc, c) == Point::zero && doc.contains("period"))
        set_check(doc, "holomorphic_matches_period", agree(f0, series_from_json(doc["period"])));
    const FrobeniusPair fp = frobenius_log_solution(op, f0);
    const MirrorMap mm = mirror_map(f0, fp.g);
    doc["f0"] = to_json(f0);
    doc["g"] = to_json(fp.g);
    doc["mirror_map"] = to_json(mm.q_of_phi);
    doc["phi_of_q"] = to_json(mm.phi_of_q);
    set_check(doc, "mirror_roundtrip",
              compose(mm.q_of_phi, mm.phi_of_q) == PowerSeries::variable(mm.q_of_phi.order()));
    return doc;
}

int recognition_budget(std::size_t order)
{
    return static_cast<int>(std::min<std::size_t>(order > 2 ? order - 2 : 0, 12));
}

Json stage_yukawa(const RunConfig& c, Json doc)
{
    const DiffOperator op = operator_from_json(need(doc, "operator", "yukawa"));
    const PowerSeries f0 = series_from_json(need(doc, "f0", "yukawa"));
    const PowerSeries g = series_from_json(need(doc, "g", "yukawa"));
    const std::size_t n = f0.order();
    const PowerSeries k = yukawa_phi(op, n);
    const MirrorMap mm = mirror_map(f0, g);

    Json yj;
    yj["series"] = to_json(k);
    Rational c1 = 1;
    const auto r = recognize_rational(k, recognition_budget(n));
    set_check(doc, "yukawa_rational", r.has_value());
    if (r) {
        c1 = classical_constant(*r);
        yj["rational"] = to_json(*r);
        const Polynomial& lead = op.coeff(op.order());
        set_check(doc, "yukawa_poles_on_discriminant",
                  polynomial_gcd(r->denominator(), lead).degree() == r->denominator().degree());
    }
    yj["c1_constant"] = to_json(c1);
    doc["yukawa_phi"] = yj;
    doc["yukawa_q"] = to_json(yukawa_q(k, mm, f0, c1));

    if (doc_point(doc, c) == Point::infinity) {
        const long twist = doc.contains("twist") ? doc["twist"].get<long>() : c.twist;
        const DiffOperator back = invert_coordinate(op, twist);
        bool ok = false;
        if (back.order() == 4 && back.coeff(4).coeff(0) != 0) {
            const auto r0 = recognize_rational(yukawa_phi(back, n), recognition_budget(n));
            if (r0) {
                try {
                    const Rational lim = classical_constant(*r0) * limit_at_infinity_x2(*r0);
                    ok = abs(lim) == c1;
                } catch (const Error&) {
                    ok = false;
                }
            }
        }
        set_check(doc, "infinity_normalization", ok);
    }
    return doc;
}

Json instanton_json(const InstantonSeries& s)
{
    Json nd = Json::array();
    for (const auto& n : s.nd) nd.push_back(to_json(n));
    return {{"n0", to_json(s.n0)}, {"nd", nd}};
}

Json stage_instantons(const RunConfig& c, Json doc)
{
    PowerSeries kappa;
    if (doc.is_array()) {
        kappa = series_from_json(doc);
        doc = Json::object();
    } else {
        kappa = Rational(2) * series_from_json(need(doc, "yukawa_q", "instantons"));
    }
    const Point point = doc_point(doc, c);
    const InstantonSeries unit = extract_instantons(kappa, 1, point);
    const InstantonSeries resolved = extract_instantons(c.m * kappa, c.m, point);

    Json ij = instanton_json(unit);
    Json rj = instanton_json(resolved);
    rj["m"] = to_json(c.m);
    ij["m_resolved"] = rj;
    doc["instantons"] = ij;
    const bool integral = unit.positive_integral() && resolved.integral();
    doc["integrality"] = integral;
    set_check(doc, "integrality", integral);
    set_check(doc, "lambert_roundtrip", lambert_roundtrip(unit, kappa.order()) == kappa);
    return doc;
}

Json normalize_input(std::string_view stage, Json input)
{
    if (input.is_array()) {
        if (stage == "pf-fit") return Json{{"period", input}};
        if (stage == "instantons") return input;
        fail(ErrorCode::schema, "stage " + std::string(stage) + " does not accept a bare series");
    }
    if (input.is_object() && input.contains("coeffs") && !input.contains("operator"))
        return Json{{"operator", input}};
    if (!input.is_null() && !input.is_object())
        fail(ErrorCode::schema, "stage input must be a JSON object or list");
    return input;
}

}  // namespace

Json run_stage(std::string_view stage, const RunConfig& config, const Json& input)
{
    try {
        if (stage == "kernel") return stage_kernel(config);
        Json doc = normalize_input(stage, input);
        if (doc.is_null()) doc = Json::object();
        if (stage == "period") return stage_period(config, std::move(doc));
        if (stage == "pf-fit") return stage_fit(config, std::move(doc));
        if (stage == "pf-invert") return stage_invert(config, std::move(doc));
        if (stage == "mirror-map") return stage_mirror(config, std::move(doc));
        if (stage == "yukawa") return stage_yukawa(config, std::move(doc));
        if (stage == "instantons") return stage_instantons(config, std::move(doc));
    } catch (const Error& e) {
        throw Error(e.code(), std::string(stage) + ": " + e.what());
    }
    fail(ErrorCode::invalid_argument, "unknown stage \"" + std::string(stage) + "\"");
}

Json run_pipeline(const RunConfig& config)
{
    Json doc = run_stage("period", config);
    doc = run_stage("pf-fit", config, doc);
    if (config.point == Point::infinity) doc = run_stage("pf-invert", config, doc);
    doc = run_stage("mirror-map", config, doc);
    doc = run_stage("yukawa", config, doc);
    return run_stage("instantons", config, doc);
}

bool checks_passed(const Json& document)
{
    if (!document.is_object() || !document.contains("checks")) return true;
    for (const auto& [name, ok] : document["checks"].items())
        if (!ok.is_boolean() || !ok.get<bool>()) return false;
    return true;
}

namespace {

std::string join_series(const Json& arr, std::size_t limit)
{
    std::string out;
    std::size_t k = 0;
    for (const auto& c : arr) {
        if (k == limit) {
            out += ", ...";
            break;
        }
        out += (k ? ", " : "") + c.get<std::string>();
        ++k;
    }
    return out;
}

}  // namespace

std::string render_text(const Json& doc)
{
    std::ostringstream out;
    if (!doc.is_object()) {
        out << doc.dump() << '\n';
        return out.str();
    }
    if (doc.contains("model")) out << "model: " << doc["model"].get<std::string>() << '\n';
    if (doc.contains("exponent_matrix")) {
        out << "exponent matrix (" << join_series(Json(doc["variables"]), 64) << "):\n";
        for (const auto& r : doc["exponent_matrix"]) {
            out << "  " << r["label"].get<std::string>() << "  " << (r["sign"].get<int>() > 0 ? '+' : '-') << " y^"
                << r["ydeg"].get<long>() << "  [";
            bool first = true;
            for (const auto& e : r["exponents"]) {
                out << (first ? "" : " ") << e.get<long>();
                first = false;
            }
            out << "]\n";
        }
        out << "integer kernel basis: " << doc["kernel_basis"].size() << " vectors\n";
        for (const auto& b : doc["kernel_basis"]) out << "  " << b.dump() << '\n';
        out << "nonnegative generators (y-degree <= " << doc["degree_bound"].get<long>()
            << "): " << doc["generators"].size() << '\n';
        for (const auto& g : doc["generators"])
            out << "  " << (g["sign"].get<int>() > 0 ? '+' : '-') << "  y^" << g["ydegree"].get<long>() << "  "
                << g["product"].get<std::string>() << '\n';
    }
    if (doc.contains("point")) out << "point: " << doc["point"].get<std::string>() << '\n';
    if (doc.contains("period"))
        out << "period (" << doc["period"].size() << " terms): " << join_series(doc["period"], 8) << '\n';
    if (doc.contains("operator")) {
        const DiffOperator op = operator_from_json(doc["operator"]);
        out << "operator (order " << op.order() << ", variable " << op.variable() << "):\n" << op.to_text();
    }
    if (doc.contains("g")) out << "g: " << join_series(doc["g"], 8) << '\n';
    if (doc.contains("mirror_map")) out << "q(phi): " << join_series(doc["mirror_map"], 8) << '\n';
    if (doc.contains("yukawa_phi")) {
        const Json& y = doc["yukawa_phi"];
        if (y.contains("rational")) {
            const Polynomial p = polynomial_from_json(y["rational"]["numerator"]);
            const Polynomial q = polynomial_from_json(y["rational"]["denominator"]);
            out << "K(phi): (" << p.to_string("phi") << ") / (" << q.to_string("phi") << ")\n";
        } else {
            out << "K(phi): " << join_series(y["series"], 8) << '\n';
        }
        out << "c1 constant: " << y["c1_constant"].get<std::string>() << '\n';
    }
    if (doc.contains("yukawa_q")) out << "yukawa_q / c1: " << join_series(doc["yukawa_q"], 8) << '\n';
    if (doc.contains("instantons")) {
        const Json& in = doc["instantons"];
        const Json& r = in["m_resolved"];
        out << "instantons (per unit m | m = " << r["m"].get<std::string>() << "):\n";
        out << "  n0  " << in["n0"].get<std::string>() << " | " << r["n0"].get<std::string>() << '\n';
        for (std::size_t d = 0; d < in["nd"].size(); ++d)
            out << "  n" << d + 1 << "  " << in["nd"][d].get<std::string>() << " | " << r["nd"][d].get<std::string>()
                << '\n';
    }
    if (doc.contains("checks")) {
        out << "checks:\n";
        for (const auto& [name, ok] : doc["checks"].items()) out << "  " << name << ": " << (ok.get<bool>() ? "ok" : "FAILED") << '\n';
    }
    return out.str();
}

}  // namespace pfm
