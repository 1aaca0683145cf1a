#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffr/harness/run.hpp"

int main(int argc, char** argv) {
    using namespace ffr::harness;
    Options opt;
    std::uint64_t budget_enum = 0, budget_oracle = 0;
    std::string commands;
    for (auto& c : command_names()) commands += (commands.empty() ? "" : ", ") + c;

    CLI::App app{"Finite-field reciprocal sums, Kloosterman sums and proof checks.\nCommands: " + commands};
    app.add_option("command", opt.command, "Subcommand")->required()->check(CLI::IsMember(command_names()));
    app.add_option("params", opt.params, "key=value parameters ('|' separates list items, a..b is a range)");
    app.add_option("--config", opt.config, "key=value file; command-line parameters override it");
    app.add_option("--threads", opt.threads, "Worker threads (default: FFR_THREADS or all cores)");
    app.add_option("--seed", opt.seed, "64-bit master seed");
    app.add_option("--emit", opt.emit, "csv, jsonl or both")->check(CLI::IsMember({"csv", "jsonl", "both"}));
    app.add_option("--out", opt.out, "Output prefix for <prefix>.csv / <prefix>.jsonl (default: stdout)");
    app.add_option("--golden", opt.golden, "Compare records with this JSONL golden file (mismatch exits 2)");
    app.add_option("--write-golden", opt.write_golden, "Regenerate records via the oracle paths into this file");
    app.add_flag("!--no-timing", opt.timing, "Omit the seconds column");
    app.add_option("--suite", opt.suite, "verify: all or a comma list of algebra, intervals, counting, charsums, prooflab, harness");
    auto* be = app.add_option("--budget-enumeration", budget_enum, "Enumeration budget");
    auto* bo = app.add_option("--budget-oracle", budget_oracle, "Oracle budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }
    if (*be) opt.budget_enumeration = budget_enum;
    if (*bo) opt.budget_oracle = budget_oracle;
    return run(opt, std::cout, std::cerr);
}
