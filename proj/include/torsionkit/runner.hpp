#pragma once

// The command runner behind the CLI: executes one subcommand against a
// configuration and produces a deterministic JSON report plus a
// human-readable summary.
//
// Reports are byte-deterministic for a fixed configuration and seed: keys
// are sorted, numbers are integers, and nothing time- or path-dependent is
// written into the JSON.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "torsionkit/caps.hpp"

namespace torsionkit {

struct RunConfig {
    std::string command;                 // ideals | filters | derivations |
                                         // check-differential | goldie-lemmas |
                                         // lambek-witness | symbolic | zq-demo | sweep
    std::vector<std::string> rings;      // builtin:<name> or spec file paths;
                                         // empty means every builtin ring
    std::vector<std::string> modules;    // module spec files, each a target of its own
    std::string corpus = "default";      // default | none
    std::uint64_t seed = 42;
    long long cases = 1000;
    std::string group;                   // zq-demo: "rank:d1,d2,..."
    std::string matrix;                  // zq-demo: rows "a b; c d" over the free part
    std::string output_path;             // JSON destination; empty = print to stdout
    Caps caps;
};

struct RunResult {
    std::string json;     // canonical report, ends with a newline
    std::string summary;  // one PASS/FAIL line per check plus a footer
    int exit_code = 0;    // 0 all pass, 1 violation found
};

/// Executes the configured command. Usage and input problems propagate as
/// the library's exceptions (UsageError, IoError, ...); the CLI maps every
/// such exception to exit code 2.
RunResult run_command(const RunConfig& config);

/// Prints the summary to `out`, then either writes the JSON report to
/// config.output_path (IoError on failure) or prints it to `out`.
void emit_result(const RunConfig& config, const RunResult& result, std::ostream& out);

const char* tool_version();

}  // namespace torsionkit
