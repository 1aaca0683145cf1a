#include "ffr/harness/output.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ffr/error.hpp"
#include "ffr/text.hpp"

namespace ffr::harness {

Record json_u128(u128 v) {
    if (v <= ~std::uint64_t{0}) return static_cast<std::uint64_t>(v);
    return to_string_u128(v);
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_cell(const Record& v) {
    if (v.is_string()) return csv_escape(v.get<std::string>());
    if (v.is_number_float()) return text::fixed6(v.get<double>());
    if (v.is_null()) return "";
    return csv_escape(v.dump());
}

std::string to_csv(const Table& t) {
    std::string out = text::join(t.columns, ",", [](const std::string& c) { return csv_escape(c); }) + "\r\n";
    for (auto& row : t.rows) {
        out += text::join(t.columns, ",", [&](const std::string& c) { return row.contains(c) ? csv_cell(row[c]) : ""; });
        out += "\r\n";
    }
    return out;
}

std::string to_jsonl(const Table& t) {
    std::string out;
    for (auto& row : t.rows) out += row.dump() + "\n";
    return out;
}

std::vector<Record> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot read " + path);
    std::vector<Record> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (text::trim(line).empty()) continue;
        try {
            out.push_back(Record::parse(line));
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ConfigParse, path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    const auto parent = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
    out << content;
    if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

std::vector<std::string> compare_golden(const std::vector<Record>& actual, const std::vector<Record>& golden,
                                        const std::set<std::string>& ignore) {
    std::vector<std::string> problems;
    std::map<std::string, const Record*> by_key;
    for (auto& g : golden)
        if (g.contains("key")) by_key[g["key"].get<std::string>()] = &g;
    for (auto& a : actual) {
        const std::string key = a.value("key", "");
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            problems.push_back("no golden record for " + key);
            continue;
        }
        const Record& g = *it->second;
        for (auto& [field, value] : a.items()) {
            if (ignore.count(field) || !g.contains(field)) continue;
            if (g[field] != value)
                problems.push_back(key + ": " + field + " = " + value.dump() + ", golden " + g[field].dump());
        }
        for (auto& [field, value] : g.items())
            if (!ignore.count(field) && !a.contains(field)) problems.push_back(key + ": missing field " + field);
    }
    return problems;
}

std::vector<Record> merge_golden(std::vector<Record> existing, const std::vector<Record>& fresh) {
    for (auto& f : fresh) {
        bool replaced = false;
        for (auto& e : existing)
            if (e.value("key", "") == f.value("key", "")) {
                e = f;
                replaced = true;
            }
        if (!replaced) existing.push_back(f);
    }
    return existing;
}

}  // namespace ffr::harness
