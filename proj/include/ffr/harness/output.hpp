#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffr/numtheory.hpp"

namespace ffr::harness {

using Record = nlohmann::ordered_json;

/// Rows are JSON objects with stable key order; `columns` selects and orders
/// the CSV view. JSONL emits every key.
struct Table {
    std::vector<std::string> columns;
    std::vector<Record> rows;
};

// Numbers above 2^64 - 1 become decimal strings.
Record json_u128(u128 v);
double round6(double v);

std::string csv_escape(const std::string& s);
std::string csv_cell(const Record& v);
std::string to_csv(const Table& t);
std::string to_jsonl(const Table& t);

std::vector<Record> read_jsonl(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Golden comparison by the "key" field. Fields in `ignore` are skipped; every
/// actual record needs a golden record with the same key and equal fields.
std::vector<std::string> compare_golden(const std::vector<Record>& actual, const std::vector<Record>& golden,
                                        const std::set<std::string>& ignore = {"seconds", "provenance", "seed"});

// Replace records with matching keys, append new ones.
std::vector<Record> merge_golden(std::vector<Record> existing, const std::vector<Record>& fresh);

}  // namespace ffr::harness
