#include "pfm/pfm.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

constexpr int exit_checks_failed = 2;
constexpr int exit_input_error = 3;

struct Options {
    std::vector<std::string> model;
    std::string input;
    std::string point;
    std::string method;
    std::string m;
    std::optional<long> order;
    std::optional<long> deg;
    std::optional<long> operator_order;
    std::optional<long> twist;
    std::optional<long> degree_bound;
    std::optional<long> oracle_order;
    bool oracle = false;
    bool text = false;
    bool json = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    return read_all(in);
}

void add_model(Json& opts, const std::vector<std::string>& model)
{
    if (model.empty()) return;
    std::string path;
    if (model.size() == 2) {
        if (model[0] != "custom") throw InputError("expected --model custom <path>");
        path = model[1];
    } else if (model[0] == "pfaffian" || model[0] == "grassmannian") {
        opts["model"] = model[0];
        return;
    } else {
        path = model[0];
    }
    opts["model_text"] = read_file(path);
}

void add_common(Json& opts, const Options& o)
{
    add_model(opts, o.model);
    if (!o.point.empty()) opts["point"] = o.point;
    if (!o.method.empty()) opts["method"] = o.method;
    if (!o.m.empty()) opts["m"] = o.m;
    if (o.deg) opts["deg"] = *o.deg;
    if (o.operator_order) opts["operator_order"] = *o.operator_order;
    if (o.twist) opts["twist"] = *o.twist;
    if (o.degree_bound) opts["degree_bound"] = *o.degree_bound;
    if (o.oracle_order) opts["oracle_order"] = *o.oracle_order;
    if (o.oracle) opts["oracle"] = true;
}

int exit_code(pfm_status s)
{
    switch (s) {
    case PFM_OK: return 0;
    case PFM_ERR_INVALID_ARGUMENT:
    case PFM_ERR_PARSE:
    case PFM_ERR_SCHEMA: return exit_input_error;
    default: return exit_checks_failed;
    }
}

int emit(pfm_status s, char* doc, int checks_ok, bool text)
{
    if (s != PFM_OK) {
        std::cerr << "error (" << pfm_status_name(s) << "): " << pfm_last_error() << '\n';
        return exit_code(s);
    }
    if (text) {
        char* rendered = nullptr;
        const pfm_status r = pfm_render_text(doc, &rendered);
        pfm_string_free(doc);
        if (r != PFM_OK) {
            std::cerr << "error (" << pfm_status_name(r) << "): " << pfm_last_error() << '\n';
            return exit_code(r);
        }
        std::cout << rendered;
        pfm_string_free(rendered);
    } else {
        std::cout << doc << '\n';
        pfm_string_free(doc);
    }
    if (!checks_ok) {
        std::cerr << "one or more checks failed\n";
        return exit_checks_failed;
    }
    return 0;
}

void output_flags(CLI::App* sub, Options& o)
{
    auto* j = sub->add_flag("--json", o.json, "JSON output (default)");
    sub->add_flag("--text", o.text, "human-readable output")->excludes(j);
}

void model_flag(CLI::App* sub, Options& o)
{
    sub->add_option("--model", o.model, "pfaffian, grassmannian, a model JSON path, or 'custom <path>'")
        ->expected(1, 2);
}

void input_flag(CLI::App* sub, Options& o)
{
    sub->add_option("--input,-i", o.input, "previous stage document (default: stdin)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Periods, Picard-Fuchs operators, mirror maps and instanton numbers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pfm_version()));
    Options o;

    auto* kernel = app.add_subcommand("kernel", "exponent matrix, kernel basis and nonnegative generators");
    model_flag(kernel, o);
    kernel->add_option("--degree-bound", o.degree_bound, "largest y-degree searched");
    output_flags(kernel, o);

    auto* period = app.add_subcommand("period", "holomorphic period series");
    model_flag(period, o);
    period->add_option("--order", o.order, "number of coefficients");
    period->add_option("--method", o.method, "closed-form or enumeration");
    period->add_flag("--oracle", o.oracle, "cross-check against the enumeration");
    period->add_option("--oracle-order", o.oracle_order, "coefficients compared by --oracle");
    output_flags(period, o);

    auto* fit = app.add_subcommand("pf-fit", "fit a Picard-Fuchs operator to the period");
    input_flag(fit, o);
    fit->add_option("--order", o.operator_order, "operator order");
    fit->add_option("--deg", o.deg, "coefficient degree");
    output_flags(fit, o);

    auto* invert = app.add_subcommand("pf-invert", "move the operator to the other special point");
    input_flag(invert, o);
    invert->add_option("--twist", o.twist, "D -> -D - twist");
    output_flags(invert, o);

    auto* mirror = app.add_subcommand("mirror-map", "Frobenius solutions and the mirror map");
    input_flag(mirror, o);
    mirror->add_option("--order", o.order, "series order");
    output_flags(mirror, o);

    auto* yukawa = app.add_subcommand("yukawa", "Yukawa coupling in phi and q");
    input_flag(yukawa, o);
    yukawa->add_option("--twist", o.twist, "twist used for the infinity normalization check");
    output_flags(yukawa, o);

    auto* inst = app.add_subcommand("instantons", "instanton numbers from the Yukawa coupling");
    input_flag(inst, o);
    inst->add_option("--m", o.m, "overall factor used for the resolved table");
    output_flags(inst, o);

    auto* pipe = app.add_subcommand("pipeline", "period through instanton numbers");
    model_flag(pipe, o);
    pipe->add_option("--point", o.point, "zero or infinity");
    pipe->add_option("--order", o.order, "series order downstream of the fit");
    pipe->add_option("--operator-order", o.operator_order, "operator order");
    pipe->add_option("--deg", o.deg, "coefficient degree");
    pipe->add_option("--twist", o.twist, "D -> -D - twist at infinity");
    pipe->add_option("--method", o.method, "closed-form or enumeration");
    pipe->add_flag("--oracle", o.oracle, "cross-check the period against the enumeration");
    pipe->add_option("--oracle-order", o.oracle_order, "coefficients compared by --oracle");
    pipe->add_option("--m", o.m, "overall factor used for the resolved table");
    output_flags(pipe, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input_error;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        Json opts = Json::object();
        add_common(opts, o);

        char* doc = nullptr;
        int checks_ok = 1;
        if (name == "pipeline") {
            if (o.order) opts["order"] = *o.order;
            const pfm_status s = pfm_pipeline(opts.dump().c_str(), &doc, &checks_ok);
            return emit(s, doc, checks_ok, o.text);
        }
        if (name == "period" && o.order) opts["period_order"] = *o.order;
        if (name == "mirror-map" && o.order) opts["order"] = *o.order;

        std::string input;
        const bool needs_input = name != "kernel" && name != "period";
        if (needs_input) input = o.input.empty() || o.input == "-" ? read_all(std::cin) : read_file(o.input);
        const pfm_status s =
            pfm_stage(name.c_str(), opts.dump().c_str(), needs_input ? input.c_str() : nullptr, &doc, &checks_ok);
        return emit(s, doc, checks_ok, o.text);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}
