#include "ffr/numtheory.hpp"

#include <algorithm>
#include <string>

#include "ffr/error.hpp"

namespace ffr {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotMonic: return "NotMonic";
        case Errc::TowerTooDeep: return "TowerTooDeep";
        case Errc::CardinalityOverflow: return "CardinalityOverflow";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ReducibleMinimalPolynomial: return "ReducibleMinimalPolynomial";
        case Errc::ZeroInInterval: return "ZeroInInterval";
        case Errc::CompositeExtensionDegree: return "CompositeExtensionDegree";
        case Errc::ConstantInZ: return "ConstantInZ";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::NotASolution: return "NotASolution";
        case Errc::RepeatedCoordinates: return "RepeatedCoordinates";
        case Errc::ConfigParse: return "ConfigParse";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r >= (static_cast<u128>(1) << 63)) return std::nullopt;
    }
    return static_cast<u64>(r);
}

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace ffr
