#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "ffr/harness/output.hpp"
#include "ffr/harness/params.hpp"
#include "ffr/options.hpp"

namespace ffr::harness {

struct Context {
    Params& ps;
    std::uint64_t seed = 0;
    RunOptions opts;
    bool oracle = false;  // golden generation: oracle code paths only
    bool timing = true;
    std::string suite = "all";
};

struct CommandResult {
    Table table;
    bool failed = false;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t fnv1a(const std::string& s);
// Sub-seed for one sweep instance, independent of sweep order and threads.
std::uint64_t instance_seed(std::uint64_t seed, const std::string& key);
// Appends seconds (when timing) and, for golden generation, provenance and seed.
void finish_record(Record& r, double seconds, const Context& ctx);
// Drops the seconds column when timing is off.
void finish_columns(Table& t, const Context& ctx);
// Certificate record {key, op, params, bound, actual, ok, seed}.
Record certificate(const std::string& op, const std::string& params, Record bound, Record actual, bool ok,
                   std::uint64_t seed);
extern const std::vector<std::string> kCertificateColumns;

CommandResult cmd_count_nk(Context& ctx);
CommandResult cmd_sumset(Context& ctx);
CommandResult cmd_kloosterman(Context& ctx);
CommandResult cmd_multilinear(Context& ctx);
CommandResult cmd_resultant_check(Context& ctx);
CommandResult cmd_divisor_count(Context& ctx);
CommandResult cmd_counting_lemma(Context& ctx);
CommandResult cmd_admissible_k(Context& ctx);
CommandResult cmd_verify(Context& ctx);

}  // namespace ffr::harness

#include <vector>

#include "ffr/bivar.hpp"
#include "ffr/rng.hpp"

namespace ffr::harness {

// Random f in F_q[T][Z] with 1 <= degZ <= k-1 and deg_T of the Z^i coefficient < (k-i)M.
BivarPoly random_lemma21_poly(FieldPtr f, int k, int M, SplitMix64& rng);

struct LemmaInstance {
    FieldPtr field = nullptr;
    std::vector<u64> S;
    std::vector<u64> coeffs;
    u64 target = 0;
};
// #S <= 8, field size <= 64, r in [2, 5], nonzero coefficients.
LemmaInstance random_lemma_instance(std::uint64_t seed);
// Certificate for T_r <= J_r (r even) or T_r^2 <= J_{r-1} J_{r+1} (r odd).
Record counting_lemma_certificate(const LemmaInstance& inst, std::uint64_t seed, const Budget& budget);

}  // namespace ffr::harness
