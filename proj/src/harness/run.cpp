#include "ffr/harness/run.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>

#include "commands.hpp"
#include "ffr/error.hpp"

namespace ffr::harness {

namespace {

using Handler = CommandResult (*)(Context&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> h = {
        {"count-nk", cmd_count_nk},
        {"sumset", cmd_sumset},
        {"kloosterman", cmd_kloosterman},
        {"multilinear", cmd_multilinear},
        {"resultant-check", cmd_resultant_check},
        {"divisor-count", cmd_divisor_count},
        {"counting-lemma", cmd_counting_lemma},
        {"verify", cmd_verify},
        {"admissible-k", cmd_admissible_k},
    };
    return h;
}

void print_summary(const Outcome& o, const std::string& command, std::ostream& os) {
    os << command << ": " << o.table.rows.size() << " record(s)";
    if (o.exit_code == kExitFailed) os << ", " << o.problems.size() << " problem(s)";
    os << "\n";
    if (o.table.rows.empty()) return;
    std::vector<std::size_t> width;
    for (auto& c : o.table.columns) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (auto& r : o.table.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < o.table.columns.size(); ++i) {
            const auto& c = o.table.columns[i];
            line.push_back(r.contains(c) ? (r[c].is_string() ? r[c].get<std::string>() : csv_cell(r[c])) : "");
            width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(int(width[i])) << line[i];
        os << "\n";
    };
    emit(o.table.columns);
    for (auto& line : cells) emit(line);
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto& [name, _] : handlers()) n.push_back(name);
        return n;
    }();
    return names;
}

Outcome execute(const Options& opt) {
    auto it = std::find_if(handlers().begin(), handlers().end(), [&](auto& h) { return h.first == opt.command; });
    if (it == handlers().end()) throw Error(Errc::ConfigParse, "unknown command '" + opt.command + "'");
    if (opt.emit != "csv" && opt.emit != "jsonl" && opt.emit != "both")
        throw Error(Errc::ConfigParse, "--emit must be csv, jsonl or both");
    Params ps;
    if (!opt.config.empty()) ps.load_file(opt.config);
    ps.load_tokens(opt.params);
    Context ctx{ps, opt.seed, {}, !opt.write_golden.empty(), opt.timing && opt.write_golden.empty(), opt.suite};
    ctx.opts.threads = opt.threads;
    if (opt.budget_enumeration) ctx.opts.budget.enumeration = *opt.budget_enumeration;
    if (opt.budget_oracle) ctx.opts.budget.oracle = *opt.budget_oracle;
    CommandResult res = it->second(ctx);
    ps.reject_unused();

    Outcome o;
    o.table = std::move(res.table);
    for (auto& r : o.table.rows)
        if ((r.contains("ok") && r["ok"] == false) || (r.contains("cauchy_ok") && r["cauchy_ok"] == false) ||
            (r.contains("oracle_ok") && r["oracle_ok"] == false) || (r.contains("bound_ok") && r["bound_ok"] == false))
            o.problems.push_back("check failed: " + r.value("key", std::string()));
    if (res.failed && o.problems.empty()) o.problems.push_back(opt.command + " reported a failed check");
    if (!opt.golden.empty()) {
        auto diff = compare_golden(o.table.rows, read_jsonl(opt.golden));
        o.problems.insert(o.problems.end(), diff.begin(), diff.end());
    }
    o.exit_code = o.problems.empty() ? kExitOk : kExitFailed;
    return o;
}

int run(const Options& opt, std::ostream& out, std::ostream& err) {
    Outcome o;
    try {
        o = execute(opt);
        // Everything is computed; only now touch the filesystem.
        const bool csv = opt.emit == "csv" || opt.emit == "both";
        const bool jsonl = opt.emit == "jsonl" || opt.emit == "both";
        if (!opt.write_golden.empty()) {
            std::vector<Record> existing;
            if (std::filesystem::exists(opt.write_golden)) existing = read_jsonl(opt.write_golden);
            Table merged{o.table.columns, merge_golden(std::move(existing), o.table.rows)};
            write_file(opt.write_golden, to_jsonl(merged));
        }
        if (opt.out.empty()) {
            if (csv) out << to_csv(o.table);
            if (jsonl) out << to_jsonl(o.table);
            print_summary(o, opt.command, err);
        } else {
            if (csv) write_file(opt.out + ".csv", to_csv(o.table));
            if (jsonl) write_file(opt.out + ".jsonl", to_jsonl(o.table));
            print_summary(o, opt.command, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::BudgetExceeded ? kExitBudget : kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    for (auto& p : o.problems) err << "FAIL " << p << "\n";
    return o.exit_code;
}

}  // namespace ffr::harness
