#include "ffr/harness/params.hpp"

#include <fstream>
#include <sstream>

#include "ffr/error.hpp"
#include "ffr/factor.hpp"
#include "ffr/rng.hpp"
#include "ffr/text.hpp"

namespace ffr::harness {

void Params::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    load_text(ss.str(), path);
}

void Params::load_text(std::string_view text, std::string_view origin) {
    int lineno = 0;
    for (auto line : text::split(text, '\n')) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = text::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(Errc::ConfigParse, std::string(origin) + ":" + std::to_string(lineno) + ": expected key=value");
        values_[std::string(text::trim(line.substr(0, eq)))] = std::string(text::trim(line.substr(eq + 1)));
    }
}

void Params::load_tokens(const std::vector<std::string>& tokens) {
    for (auto& t : tokens) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(Errc::ConfigParse, "expected key=value, got '" + t + "'");
        values_[t.substr(0, eq)] = t.substr(eq + 1);
    }
}

std::string Params::str(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw Error(Errc::ConfigParse, "missing parameter '" + key + "'");
    used_.insert(key);
    return it->second;
}

std::string Params::str(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    return str(key);
}

std::uint64_t Params::u64(const std::string& key) const { return text::parse_u64(str(key)); }

std::uint64_t Params::u64(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? u64(key) : fallback;
}

bool Params::flag(const std::string& key, bool fallback) const { return has(key) ? text::parse_bool(str(key)) : fallback; }

std::vector<long long> parse_int_list(std::string_view s) {
    std::vector<long long> out;
    for (auto part : text::split(s, '|')) {
        part = text::trim(part);
        if (auto dots = part.find(".."); dots != std::string_view::npos) {
            const long long lo = text::parse_i64(part.substr(0, dots)), hi = text::parse_i64(part.substr(dots + 2));
            if (hi < lo || hi - lo > 1'000'000) throw Error(Errc::ConfigParse, "bad range '" + std::string(part) + "'");
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(text::parse_i64(part));
        }
    }
    return out;
}

std::vector<long long> Params::int_list(const std::string& key) const { return parse_int_list(str(key)); }

std::vector<long long> Params::int_list(const std::string& key, const std::string& fallback) const {
    return parse_int_list(str(key, fallback));
}

std::vector<std::string> Params::list(const std::string& key) const {
    const std::string value = str(key);
    std::vector<std::string> out;
    for (auto part : text::split(value, '|')) out.emplace_back(text::trim(part));
    return out;
}

std::vector<std::string> Params::list(const std::string& key, const std::string& fallback) const {
    if (!has(key)) {
        std::vector<std::string> out;
        for (auto part : text::split(fallback, '|')) out.emplace_back(text::trim(part));
        return out;
    }
    return list(key);
}

void Params::reject_unused() const {
    for (auto& [k, v] : values_)
        if (!used_.count(k)) throw Error(Errc::ConfigParse, "unknown parameter '" + k + "'");
}

std::string Params::canonical() const {
    std::string s;
    for (auto& [k, v] : values_) {
        if (!used_.count(k)) continue;
        if (!s.empty()) s += ' ';
        s += k + "=" + v;
    }
    return s;
}

FieldPtr base_field(const Params& ps) {
    FieldPtr fp = Field::prime(ps.u64("p"));
    if (!ps.has("phi")) return fp;
    return Field::extend(fp, parse_poly(fp, ps.str("phi")));
}

FieldPtr extension_field(const Params& ps, std::uint64_t seed) {
    FieldPtr base = base_field(ps);
    const std::string psi = ps.str("psi", "auto");
    if (psi != "auto") {
        Poly f = parse_poly(base, psi);
        if (ps.has("n") && static_cast<int>(ps.u64("n")) != f.degree())
            throw Error(Errc::ConfigParse, "n does not match deg psi");
        return Field::extend(base, f);
    }
    if (!ps.has("n")) throw Error(Errc::ConfigParse, "need psi or n");
    return Field::extend(base, auto_irreducible(base, static_cast<int>(ps.u64("n")), SplitMix64::derive(seed, 0x707369)));
}

}  // namespace ffr::harness
