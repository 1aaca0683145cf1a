#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ffr/harness/output.hpp"

namespace ffr::harness {

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitFailed = 2, kExitBudget = 3 };

struct Options {
    std::string command;
    std::vector<std::string> params;  // key=value, applied after the config file
    std::string config;
    int threads = 0;  // 0: FFR_THREADS or hardware concurrency
    std::uint64_t seed = 1;
    std::string emit = "csv";  // csv | jsonl | both
    std::string out;           // file prefix; empty writes CSV to stdout
    std::string golden;        // compare against this JSONL file
    std::string write_golden;  // regenerate this JSONL file via the oracle paths
    bool timing = true;
    std::string suite = "all";
    std::optional<std::uint64_t> budget_enumeration;
    std::optional<std::uint64_t> budget_oracle;
};

const std::vector<std::string>& command_names();

struct Outcome {
    int exit_code = kExitOk;
    Table table;
    std::vector<std::string> problems;  // failed checks and golden mismatches
};

/// Computes the whole sweep in memory; nothing is written. Errors propagate as
/// ffr::Error.
Outcome execute(const Options& opt);

/// execute() plus artifact writing and reporting; returns the process exit code.
/// On any error nothing is written.
int run(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace ffr::harness
