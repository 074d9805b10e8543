#pragma once

#include "dq/representation.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dq {

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_parse = 2,
    exit_config = 3,
    exit_property = 4,
    exit_polarization = 5,
};

struct RunConfig {
    int dim = 1;
    ChartKind chart = ChartKind::real;
    std::optional<StarKind> product;  // normal on real charts, wick on the Bargmann chart
    std::optional<Representation> rep;
    std::string format = "text";      // text | json
    std::uint64_t seed = 1;
    unsigned max_degree = 4;
    unsigned cases = 10;
    std::string psi = "generic";      // generic | expr
    std::string suite = "all";

    /// Throws ConfigError for inconsistent settings (wick without Bargmann, ...).
    void validate() const;
    Chart make_chart() const;
    StarKind star_kind() const;
    /// Explicit --rep, or the natural one for the command and product.
    Representation representation(const std::string& command) const;
};

struct CheckReport;

/// "all N properties passed", or one block per counterexample; JSON with --format json.
void write_report(std::ostream& out, const RunConfig& config, const CheckReport& report);

/// Executes one command. Results go to `out`, diagnostics to `err`; returns the exit code.
int run_command(const std::string& command, const std::vector<std::string>& args, const RunConfig& config,
                std::ostream& out, std::ostream& err);

/// Full command line: dq <command> [options] <expr args>
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dq
