#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ffr/field.hpp"
#include "ffr/poly.hpp"

namespace ffr::harness {

/// key=value parameters from a config file and the command line (the command
/// line wins). Lookups record which keys were used so leftovers can be rejected.
class Params {
public:
    // Lines "key=value"; '#' starts a comment; blank lines ignored.
    void load_file(const std::string& path);
    void load_text(std::string_view text, std::string_view origin);
    // Each token must contain '='.
    void load_tokens(const std::vector<std::string>& tokens);
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string str(const std::string& key) const;
    std::string str(const std::string& key, const std::string& fallback) const;
    std::uint64_t u64(const std::string& key) const;
    std::uint64_t u64(const std::string& key, std::uint64_t fallback) const;
    bool flag(const std::string& key, bool fallback) const;

    // "a..b", "a|b|c", or a single integer.
    std::vector<long long> int_list(const std::string& key) const;
    std::vector<long long> int_list(const std::string& key, const std::string& fallback) const;
    // '|'-separated raw values.
    std::vector<std::string> list(const std::string& key) const;
    std::vector<std::string> list(const std::string& key, const std::string& fallback) const;

    // ConfigParse naming any key that no lookup touched.
    void reject_unused() const;

    // Canonical "k=v k=v" string of the keys that were looked up, sorted.
    std::string canonical() const;

private:
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> used_;
};

std::vector<long long> parse_int_list(std::string_view s);

/// F_p, or F_q = F_p[U]/phi when phi is given.
FieldPtr base_field(const Params& ps);
/// F_q[T]/psi, with psi given or drawn by auto_irreducible(n, seed) when psi=auto
/// or only n is set.
FieldPtr extension_field(const Params& ps, std::uint64_t seed);

}  // namespace ffr::harness
