#include "dq/cli.hpp"

#include "dq/checks.hpp"
#include "dq/expression.hpp"
#include "dq/json.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace dq {
namespace {

const std::vector<std::string> kCommands{"star", "bullet", "quantize", "prequantize", "bracket", "extract", "check"};

void expect_args(const std::string& command, const std::vector<std::string>& args, size_t lo, size_t hi) {
    if (args.size() < lo || args.size() > hi) {
        std::string count = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
        throw ConfigError(command + " takes " + count + " expression argument(s), got " + std::to_string(args.size()));
    }
}

Function parse_observable(const std::string& text, const ChartShape& s) {
    Function f = parse_function(text, {s, 0});
    if (!f.is_observable()) throw AlgebraError("expected an observable (no theta, e(m), psi or weight), got " + text);
    return f;
}

void emit(std::ostream& out, const RunConfig& config, const Function& f, const Function& shown) {
    if (config.format == "json")
        out << to_json(f).dump() << "\n";
    else
        out << to_string(shown) << "\n";
}

void emit(std::ostream& out, const RunConfig& config, const Function& f) { emit(out, config, f, f); }

// The wave function a command acts on: generic, or psi-component given as text.
Function input_wave(const RunConfig& config, Representation rep, const Chart& chart,
                    const std::vector<std::string>& args, size_t index) {
    if (config.psi == "generic") {
        if (args.size() > index) throw ConfigError("--psi generic takes no wave-function argument");
        return generic_wave_function(rep, chart);
    }
    if (args.size() <= index) throw ConfigError("--psi expr needs a wave-function argument");
    const Function component = parse_function(args[index], {chart.shape(), configuration_domain(rep, chart.shape())});
    for (const auto& [mono, c] : component.terms())
        for (int v = 0; v < chart.shape().variable_count(); ++v)
            if (mono.powers[v] != 0 && !in_domain(configuration_domain(rep, chart.shape()), v))
                throw AlgebraError("the " + to_string(rep) + " wave-function component cannot depend on " +
                                   chart.shape().name(v));
    return wave_function(rep, chart, component);
}

}  // namespace

void write_report(std::ostream& out, const RunConfig& config, const CheckReport& report) {
    if (config.format == "json") {
        Json doc;
        doc["suite"] = config.suite;
        doc["seed"] = config.seed;
        doc["checked"] = report.checked;
        doc["failed"] = report.failures.size();
        doc["failures"] = Json::array();
        for (const auto& f : report.failures) {
            Json item;
            item["property"] = f.property;
            item["inputs"] = Json::object();
            for (const auto& [k, v] : f.inputs) item["inputs"][k] = v;
            item["expected"] = f.expected;
            item["actual"] = f.actual;
            doc["failures"].push_back(std::move(item));
        }
        out << doc.dump() << "\n";
        return;
    }
    if (report.ok()) {
        out << "all " << report.checked << " properties passed\n";
        return;
    }
    for (const auto& f : report.failures) {
        out << "FAIL " << f.property << "\n";
        for (const auto& [k, v] : f.inputs) out << "  " << k << " = " << v << "\n";
        out << "  expected: " << f.expected << "\n";
        out << "  actual:   " << f.actual << "\n";
    }
    out << report.failures.size() << " of " << report.checked << " properties failed\n";
}

namespace {

int execute(const std::string& command, const std::vector<std::string>& args, const RunConfig& config,
            std::ostream& out) {
    config.validate();
    if (command == "check") {
        expect_args(command, args, 0, 0);
        CheckOptions options{config.dim, config.seed, config.max_degree, config.cases};
        const CheckReport report = run_suite(config.suite, options);
        write_report(out, config, report);
        return report.ok() ? exit_ok : exit_property;
    }

    const Chart chart = config.make_chart();
    const auto& s = chart.shape();
    const StarKind kind = config.star_kind();
    const Representation rep = config.representation(command);
    check_compatible(rep, s);
    const ParseContext context{s, configuration_domain(rep, s)};

    if (command == "star") {
        expect_args(command, args, 2, 2);
        emit(out, config, star_product(kind, chart, parse_observable(args[0], s), parse_observable(args[1], s)));
    } else if (command == "bullet") {
        expect_args(command, args, 2, 2);
        emit(out, config, bullet_product(kind, chart, parse_observable(args[0], s), parse_function(args[1], context)));
    } else if (command == "bracket") {
        expect_args(command, args, 2, 2);
        emit(out, config, souriau_bracket(chart, parse_function(args[0], context), parse_function(args[1], context)));
    } else if (command == "quantize" || command == "prequantize") {
        expect_args(command, args, 1, 2);
        const Function f = parse_observable(args[0], s);
        const Function wave = input_wave(config, rep, chart, args, 1);
        Function result(s);
        if (command == "prequantize") {
            result = prequantize(chart, f, wave);
        } else {
            if (rep == Representation::phase) throw ConfigError("quantize needs a polarized representation");
            result = quantize(kind, chart, f, wave, representation_polarization(rep, chart));
        }
        emit(out, config, result, wave_component(rep, result));
    } else if (command == "extract") {
        expect_args(command, args, 1, 1);
        const DiffOperator d = extract_operator(kind, chart, parse_observable(args[0], s), rep);
        if (config.format == "json")
            out << to_json(d).dump() << "\n";
        else
            out << to_string(d) << "\n";
    } else {
        throw ConfigError("unknown command '" + command + "'");
    }
    return exit_ok;
}

}  // namespace

void RunConfig::validate() const {
    if (chart == ChartKind::bargmann && dim != 1) throw ConfigError("the Bargmann chart has dimension 1");
    if (dim < 1 || dim > 8) throw ConfigError("dimension must be between 1 and 8");
    if (product == StarKind::wick && chart != ChartKind::bargmann)
        throw ConfigError("the Wick product needs --chart bargmann");
    if (rep) check_compatible(*rep, ChartShape(chart == ChartKind::real ? ChartShape::real(dim) : ChartShape::bargmann()));
    if (format != "text" && format != "json") throw ConfigError("--format must be text or json");
    if (psi != "generic" && psi != "expr") throw ConfigError("--psi must be generic or expr");
}

Chart RunConfig::make_chart() const { return chart == ChartKind::real ? Chart::real(dim) : Chart::bargmann(); }

StarKind RunConfig::star_kind() const {
    if (product) return *product;
    return chart == ChartKind::bargmann ? StarKind::wick : StarKind::normal;
}

Representation RunConfig::representation(const std::string& command) const {
    if (rep) return *rep;
    if (chart == ChartKind::bargmann) return command == "prequantize" ? Representation::phase : Representation::bargmann;
    if (command == "prequantize" || command == "bracket") return Representation::phase;
    return star_kind() == StarKind::antinormal ? Representation::momentum : Representation::position;
}

int run_command(const std::string& command, const std::vector<std::string>& args, const RunConfig& config,
                std::ostream& out, std::ostream& err) {
    const bool json = config.format == "json";
    auto fail = [&](int code, const std::string& kind, const std::string& message) {
        if (json) {
            Json doc;
            doc["error"] = kind;
            doc["message"] = message;
            out << doc.dump() << "\n";
        }
        err << "dq: " << kind << ": " << message << "\n";
        return code;
    };
    try {
        return execute(command, args, config, out);
    } catch (const ParseError& e) {
        return fail(exit_parse, "parse error", e.what());
    } catch (const ConfigError& e) {
        return fail(exit_config, "config error", e.what());
    } catch (const PolarizationViolation& e) {
        if (json) {
            Json doc;
            doc["error"] = "polarization violation";
            doc["message"] = e.what();
            doc["offending"] = to_json(e.offending());
            out << doc.dump() << "\n";
        }
        err << "dq: polarization violation: " << e.what() << "\n  offending: " << to_string(e.offending()) << "\n";
        return exit_polarization;
    } catch (const std::exception& e) {
        return fail(exit_error, "error", e.what());
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact star products, bullet products and quantum operators on flat phase spaces", "dq"};
    RunConfig config;
    std::string command, chart = "real", product, rep;
    std::vector<std::string> args;

    app.add_option("command", command, "star | bullet | quantize | prequantize | bracket | extract | check")
        ->required()
        ->check(CLI::IsMember(kCommands));
    app.add_option("args", args, "Expressions");
    app.add_option("--dim", config.dim, "Phase-space dimension n")->check(CLI::Range(1, 8));
    app.add_option("--chart", chart, "real | bargmann")->check(CLI::IsMember({"real", "bargmann"}));
    app.add_option("--product", product, "normal | antinormal | moyal | wick")
        ->check(CLI::IsMember({"normal", "antinormal", "moyal", "wick"}));
    app.add_option("--rep", rep, "position | momentum | bargmann | phase")
        ->check(CLI::IsMember({"position", "momentum", "bargmann", "phase"}));
    app.add_option("--format", config.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", config.seed, "Seed for check suites");
    app.add_option("--max-degree", config.max_degree, "Degree bound for random inputs")->check(CLI::Range(1, 12));
    app.add_option("--cases", config.cases, "Random cases per property")->check(CLI::Range(1, 10000));
    app.add_option("--psi", config.psi, "generic | expr")->check(CLI::IsMember({"generic", "expr"}));
    app.add_option("--suite", config.suite, "Check suite, or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "dq: config error: " << e.what() << "\n";
        return exit_config;
    }
    config.chart = chart == "bargmann" ? ChartKind::bargmann : ChartKind::real;
    if (!product.empty()) config.product = parse_star_kind(product);
    if (!rep.empty()) config.rep = parse_representation(rep);
    return run_command(command, args, config, out, err);
}

}  // namespace dq
