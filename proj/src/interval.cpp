#include "ffr/interval.hpp"

#include "ffr/error.hpp"
#include "ffr/text.hpp"

namespace ffr {

Interval Interval::make(FieldPtr field, u64 gamma, int m, bool punctured) {
    if (!field) throw Error(Errc::InvalidArgument, "interval needs a field");
    if (m < 1 || m > field->degree())
        throw Error(Errc::DimensionOutOfRange,
                    "m=" + std::to_string(m) + " outside [1, " + std::to_string(field->degree()) + "]");
    if (gamma >= field->cardinality()) throw Error(Errc::InvalidArgument, "gamma is not an element of the field");
    Interval iv;
    iv.field = field;
    iv.gamma = gamma;
    iv.m = m;
    iv.punctured = punctured;
    u64 s = 1;
    for (int i = 0; i < m; ++i) s *= iv.q();
    iv.span_ = s;
    return iv;
}

Interval Interval::parse(FieldPtr field, std::string_view spec) {
    u64 gamma = 0;
    int m = -1;
    bool punctured = false;
    // Element literals of towers contain ';', so a token without '=' continues
    // the previous value.
    std::vector<std::pair<std::string, std::string>> kv;
    for (auto tok : text::split(spec, ';')) {
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) {
            if (kv.empty()) throw Error(Errc::ConfigParse, "bad interval token '" + std::string(tok) + "'");
            kv.back().second += ";" + std::string(tok);
        } else {
            kv.emplace_back(std::string(text::trim(tok.substr(0, eq))), std::string(tok.substr(eq + 1)));
        }
    }
    for (auto& [k, v] : kv) {
        if (k == "gamma")
            gamma = field->parse(text::trim(v));
        else if (k == "m")
            m = static_cast<int>(text::parse_i64(v));
        else if (k == "punctured")
            punctured = text::parse_bool(v);
        else
            throw Error(Errc::ConfigParse, "unknown interval key '" + k + "'");
    }
    if (m < 0) throw Error(Errc::ConfigParse, "interval needs m");
    return make(field, gamma, m, punctured);
}

u64 Interval::q() const noexcept { return field->is_prime() ? field->cardinality() : field->base()->cardinality(); }

bool Interval::contains(u64 x) const noexcept {
    if (punctured && x == 0) return false;
    return field->sub(x, gamma) < span_;
}

std::vector<u64> Interval::elements(const Budget& budget) const {
    if (span_ > budget.enumeration)
        throw Error(Errc::BudgetExceeded, "interval of " + std::to_string(span_) + " elements exceeds enumeration budget");
    std::vector<u64> out;
    out.reserve(cardinality());
    for_each([&](u64 x) { out.push_back(x); });
    return out;
}

std::string Interval::str() const {
    return "gamma=" + field->format(gamma) + ";m=" + std::to_string(m) + ";punctured=" + (punctured ? "true" : "false");
}

std::vector<u64> IntervalRange::elements() const {
    std::vector<u64> out;
    for_each([&](u64 x) { out.push_back(x); });
    return out;
}

std::vector<IntervalRange> interval_partition(const Interval& iv, int parts) {
    if (parts < 1) throw Error(Errc::InvalidArgument, "parts must be >= 1");
    std::vector<IntervalRange> out;
    const u128 s = iv.span();
    for (int i = 0; i < parts; ++i)
        out.push_back({iv, static_cast<u64>(s * i / parts), static_cast<u64>(s * (i + 1) / parts)});
    return out;
}

}  // namespace ffr
