#include "core/json_io.hpp"

#include "core/error.hpp"

namespace pfm {

namespace {

[[noreturn]] void schema_error(const std::string& what)
{
    fail(ErrorCode::schema, what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) schema_error(std::string("expected an object with field \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"");
    return *it;
}

long long_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
        fail(ErrorCode::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
    }
}

Json to_json(const Rational& r)
{
    return to_string(r);
}

Json to_json(const Integer& z)
{
    return to_string(z);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    schema_error("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Integer integer_from_json(const Json& j)
{
    const Rational r = rational_from_json(j);
    if (!is_integer(r)) schema_error("expected an integer, got " + to_string(r));
    return r.get_num();
}

Json to_json(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array()) schema_error("polynomial must be a list of integer coefficients");
    std::vector<Integer> c;
    for (const auto& e : j) c.push_back(integer_from_json(e));
    return Polynomial(std::move(c));
}

Json to_json(const PowerSeries& f)
{
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

PowerSeries series_from_json(const Json& j)
{
    if (!j.is_array()) schema_error("series must be a list of coefficients");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return PowerSeries(std::move(c));
}

Json to_json(const DiffOperator& op)
{
    Json coeffs = Json::array();
    for (const auto& p : op.coeffs()) coeffs.push_back(to_json(p));
    return {{"order", op.order()}, {"variable", op.variable()}, {"coeffs", coeffs}};
}

DiffOperator operator_from_json(const Json& j)
{
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.empty()) schema_error("operator coeffs must be a non-empty list");
    std::vector<Polynomial> polys;
    for (const auto& c : coeffs) polys.push_back(polynomial_from_json(c));
    std::string var = "phi";
    if (auto it = j.find("variable"); it != j.end()) {
        if (!it->is_string()) schema_error("operator variable must be a string");
        var = it->get<std::string>();
    }
    DiffOperator op(std::move(polys), var);
    if (auto it = j.find("order"); it != j.end() && long_from_json(*it, "operator order") != static_cast<long>(op.order()))
        schema_error("operator order does not match its coefficient list");
    return op;
}

Json to_json(const RationalFunction& r)
{
    return {{"numerator", to_json(r.numerator())}, {"denominator", to_json(r.denominator())}};
}

Json to_json(const MonomialModel& m)
{
    Json factors = Json::array();
    for (const auto& f : m.factors) {
        Json monos = Json::array();
        for (const auto& mono : f) {
            Json ex = Json::object();
            for (const auto& [v, e] : mono.exponents)
                if (e != 0) ex[v] = e;
            monos.push_back({{"sign", mono.sign}, {"ydeg", mono.ydeg}, {"exponents", ex}});
        }
        factors.push_back(monos);
    }
    return {{"name", m.name}, {"variables", m.variables}, {"factors", factors}, {"phi_ydegree", m.phi_ydegree}};
}

MonomialModel model_from_json(const Json& j)
{
    if (!j.is_object()) schema_error("model must be a JSON object");
    MonomialModel m;
    m.name = "custom";
    if (auto it = j.find("name"); it != j.end()) {
        if (!it->is_string()) schema_error("model name must be a string");
        m.name = it->get<std::string>();
    }
    const Json& vars = field(j, "variables");
    if (!vars.is_array()) schema_error("variables must be a list of names");
    for (const auto& v : vars) {
        if (!v.is_string()) schema_error("variable names must be strings");
        m.variables.push_back(v.get<std::string>());
    }
    const Json& factors = field(j, "factors");
    if (!factors.is_array()) schema_error("factors must be a list of monomial lists");
    for (const auto& f : factors) {
        if (!f.is_array()) schema_error("each factor must be a list of monomials");
        std::vector<Monomial> monos;
        for (const auto& mj : f) {
            Monomial mono;
            mono.sign = static_cast<int>(long_from_json(field(mj, "sign"), "sign"));
            mono.ydeg = long_from_json(field(mj, "ydeg"), "ydeg");
            const Json& ex = field(mj, "exponents");
            if (!ex.is_object()) schema_error("exponents must be an object mapping variables to integers");
            for (const auto& [v, e] : ex.items()) mono.exponents[v] = long_from_json(e, "exponent");
            monos.push_back(std::move(mono));
        }
        m.factors.push_back(std::move(monos));
    }
    if (auto it = j.find("phi_ydegree"); it != j.end()) m.phi_ydegree = long_from_json(*it, "phi_ydegree");
    m.validate();
    return m;
}

Json to_json(const KernelGenerator& g)
{
    return {{"exponents", g.exponents}, {"sign", g.sign}, {"ydegree", g.ydegree}};
}

}  // namespace pfm
