#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ffr/error.hpp"
#include "ffr/harness/output.hpp"
#include "ffr/harness/params.hpp"
#include "ffr/harness/run.hpp"

using namespace ffr;
using namespace ffr::harness;
namespace fs = std::filesystem;

namespace {

const std::string kData = FFR_TEST_DATA_DIR;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ffr_harness_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(Options opt) {
    std::ostringstream out, err;
    const int code = run(opt, out, err);
    return {code, out.str(), err.str()};
}

Options count_nk(std::vector<std::string> params) {
    Options o;
    o.command = "count-nk";
    o.params = std::move(params);
    o.timing = false;
    return o;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("CSV follows RFC 4180") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("1,0,1") == "\"1,0,1\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("a\nb") == "\"a\nb\"");
    Table t{{"a", "b", "c"}, {}};
    Record r;
    r["a"] = "x,y";
    r["b"] = 0.5;
    r["c"] = true;
    r["extra"] = 1;
    t.rows.push_back(r);
    CHECK(to_csv(t) == "a,b,c\r\n\"x,y\",0.500000,true\r\n");
    CHECK(to_jsonl(t) == "{\"a\":\"x,y\",\"b\":0.5,\"c\":true,\"extra\":1}\n");
    CHECK(json_u128(static_cast<u128>(1) << 70) == "1180591620717411303424");
    CHECK(json_u128(42) == 42);
}

TEST_CASE("params: lists, ranges, file then command line") {
    CHECK(parse_int_list("1..3|7") == std::vector<long long>{1, 2, 3, 7});
    CHECK(parse_int_list("5") == std::vector<long long>{5});
    CHECK_THROWS_AS(parse_int_list("3..1"), Error);
    Params ps;
    ps.load_text("# comment\np = 3\nm=1..2  # trailing\n", "inline");
    ps.load_tokens({"m=4"});
    CHECK(ps.u64("p") == 3);
    CHECK(ps.int_list("m") == std::vector<long long>{4});
    CHECK(ps.list("gamma", "0|a") == std::vector<std::string>{"0", "a"});
    CHECK(ps.canonical() == "m=4 p=3");
    ps.set("unused", "1");
    CHECK_THROWS_AS(ps.reject_unused(), Error);
    CHECK_THROWS_AS(ps.load_tokens({"novalue"}), Error);
    Params bad;
    bad.load_tokens({"p=2", "psi=1,1,1", "n=3"});
    CHECK_THROWS_AS(extension_field(bad, 1), Error);
}

TEST_CASE("count-nk example sweep gives four rows") {
    auto r = run_cli(count_nk({"p=2", "psi=1,1,0,0,0,0,1", "m=1..2", "k=1..2", "gamma=0"}));
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out) == 5);
    CHECK(r.out.rfind("q,n,m,k,gamma,psi,Nk,sumset,cauchy_lhs,cauchy_rhs,cauchy_ok,ratio\r\n", 0) == 0);
    // The same sweep with a reducible modulus is a configuration error.
    auto bad = run_cli(count_nk({"p=2", "psi=1,0,1,1,0,0,1", "m=1..2", "k=1..2", "gamma=0"}));
    CHECK(bad.code == kExitError);
    CHECK(bad.err.find("NotIrreducible") != std::string::npos);
}

TEST_CASE("identical config and seed give identical artifacts; threads do not matter") {
    TempDir dir;
    auto make = [&](const std::string& prefix, int threads) {
        Options o;
        o.command = "kloosterman";
        o.params = {"p=2", "n=7", "d=2|3", "m=1|2", "instances=4", "weights=disc"};
        o.seed = 99;
        o.threads = threads;
        o.timing = false;
        o.emit = "both";
        o.out = dir.file(prefix);
        REQUIRE(run_cli(o).code == kExitOk);
    };
    make("a", 1);
    make("b", 1);
    make("c", 4);
    for (const char* ext : {".csv", ".jsonl"}) {
        const std::string a = slurp(dir.file("a") + ext);
        CHECK(lines(a) >= 16);
        CHECK(a == slurp(dir.file("b") + ext));
        CHECK(a == slurp(dir.file("c") + ext));
    }
    Options n1 = count_nk({"p=3", "psi=1,2,0,0,0,1", "m=1..2", "k=1..3", "gamma=0|a"});
    n1.threads = 1;
    Options n4 = n1;
    n4.threads = 4;
    CHECK(run_cli(n1).out == run_cli(n4).out);
}

TEST_CASE("random instances do not depend on the sweep length") {
    Options o;
    o.command = "kloosterman";
    o.params = {"p=2", "n=5", "d=2", "m=1", "instances=3"};
    o.timing = false;
    o.emit = "jsonl";
    const auto three = run_cli(o).out;
    o.params.back() = "instances=5";
    const auto five = run_cli(o).out;
    CHECK(five.rfind(three, 0) == 0);
    o.seed = 2;
    CHECK(run_cli(o).out.rfind(three, 0) != 0);
}

TEST_CASE("budget refusal exits 3 and writes nothing") {
    TempDir dir;
    Options o = count_nk({"p=2", "psi=1,0,1,0,0,1", "m=1|5", "k=1|4"});
    o.budget_enumeration = 1000;
    o.out = dir.file("refused");
    o.emit = "both";
    auto r = run_cli(o);
    CHECK(r.code == kExitBudget);
    CHECK(r.err.find("BudgetExceeded") != std::string::npos);
    CHECK(fs::is_empty(dir.path));
    Options g = count_nk({"p=2", "psi=1,0,1,0,0,1", "m=5", "k=4"});
    g.budget_oracle = 10;
    g.write_golden = dir.file("golden.jsonl");
    CHECK(run_cli(g).code == kExitBudget);
    CHECK(fs::is_empty(dir.path));
}

TEST_CASE("config file with command-line override") {
    TempDir dir;
    std::ofstream(dir.file("run.cfg")) << "# sweep\np=2\npsi=1,0,1,0,0,1\nm=1..2\nk=1\ngamma=0\n";
    Options o = count_nk({"m=2"});
    o.config = dir.file("run.cfg");
    auto r = run_cli(o);
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out) == 2);
    CHECK(r.out.find("\r\n2,5,2,1,") != std::string::npos);
    o.params.push_back("colour=red");
    CHECK(run_cli(o).code == kExitError);
    o.config = dir.file("missing.cfg");
    auto missing = run_cli(o);
    CHECK(missing.code == kExitError);
    CHECK(missing.err.find("IoError") != std::string::npos);
}

TEST_CASE("golden comparison") {
    Options o;
    o.command = "kloosterman";
    o.params = {"p=2", "psi=1,0,1,0,0,1", "d=2", "m=1", "gamma=a^3"};
    o.golden = kData + "/golden/kloosterman.jsonl";
    auto r = run_cli(o);
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out) == 2);

    TempDir dir;
    auto golden = read_jsonl(o.golden);
    REQUIRE(golden.size() == 1);
    golden[0]["acc"]["counts"] = {3, 1};
    write_file(dir.file("bad.jsonl"), to_jsonl(Table{{}, golden}));
    o.golden = dir.file("bad.jsonl");
    auto bad = run_cli(o);
    CHECK(bad.code == kExitFailed);
    CHECK(bad.err.find("acc") != std::string::npos);

    o.params = {"p=2", "psi=1,0,1,0,0,1", "d=2", "m=1", "gamma=a^4"};
    o.golden = kData + "/golden/kloosterman.jsonl";
    CHECK(run_cli(o).code == kExitFailed);
}

TEST_CASE("write-golden merges by key and marks provenance") {
    TempDir dir;
    Options o = count_nk({"p=2", "psi=1,0,1,0,0,1", "m=1", "k=1..2", "gamma=0"});
    o.write_golden = dir.file("g.jsonl");
    o.seed = 5;
    REQUIRE(run_cli(o).code == kExitOk);
    o.params = {"p=2", "psi=1,0,1,0,0,1", "m=1..2", "k=2", "gamma=0"};
    REQUIRE(run_cli(o).code == kExitOk);
    auto recs = read_jsonl(dir.file("g.jsonl"));
    CHECK(recs.size() == 3);
    for (auto& r : recs) {
        CHECK(r["provenance"] == "oracle");
        CHECK(r["seed"] == 5);
        CHECK_FALSE(r.contains("seconds"));
    }
    Options cmp = count_nk({"p=2", "psi=1,0,1,0,0,1", "m=1..2", "k=2", "gamma=0"});
    cmp.timing = true;
    cmp.golden = dir.file("g.jsonl");
    CHECK(run_cli(cmp).code == kExitOk);
}

TEST_CASE("golden N_k grid matches the fast path") {
    const auto golden = read_jsonl(kData + "/golden/nk_grid.jsonl");
    CHECK(golden.size() == 48);
    const std::vector<std::vector<std::string>> fields = {{"p=2", "psi=1,0,1,0,0,1", "gamma=0|a|a^4"},
                                                          {"p=2", "psi=1,1,0,0,0,0,0,1", "gamma=0|a|a^6"},
                                                          {"p=3", "psi=1,2,0,0,0,1", "gamma=0|a|a^4"},
                                                          {"p=3", "psi=2,0,1,0,0,0,0,1", "gamma=0|a|a^6"}};
    for (auto& f : fields) {
        Options o = count_nk({f[0], f[1], f[2], "m=1..2", "k=1..2"});
        o.golden = kData + "/golden/nk_grid.jsonl";
        auto r = run_cli(o);
        CHECK_MESSAGE(r.code == kExitOk, r.err);
    }
}

TEST_CASE("verify exits 0 and emits certificates") {
    Options o;
    o.command = "verify";
    o.suite = "all";
    o.seed = 42;
    o.emit = "jsonl";
    auto r = run_cli(o);
    CHECK_MESSAGE(r.code == kExitOk, r.err);
    std::istringstream in(r.out);
    std::string line;
    int certs = 0;
    while (std::getline(in, line)) {
        auto rec = Record::parse(line);
        for (const char* k : {"op", "params", "bound", "actual", "ok", "seed"}) CHECK(rec.contains(k));
        CHECK(rec["ok"] == true);
        ++certs;
    }
    CHECK(certs >= 15);
    o.suite = "nonsense";
    CHECK(run_cli(o).code == kExitError);
}

TEST_CASE("admissible-k against a direct search") {
    Options o;
    o.command = "admissible-k";
    o.params = {"n=100|400|10000", "m=1..3", "d=1|5", "omega=2"};
    o.emit = "jsonl";
    auto r = run_cli(o);
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        auto rec = Record::parse(line);
        const long long n = rec["n"], m = rec["m"], d = rec["d"], w = rec["omega"];
        long long kmin = 1;
        while (kmin * d * m <= w * n) ++kmin;
        long long kmax = 0;
        while (4 * (kmax + 1) * (kmax + 1) * m < n) ++kmax;
        CHECK(rec["k_min"] == kmin);
        CHECK(rec["k_max"] == kmax);
        CHECK(rec["feasible"] == (kmin <= kmax));
        ++rows;
    }
    CHECK(rows == 18);
}

TEST_CASE("counting-lemma and resultant-check commands") {
    Options o;
    o.command = "counting-lemma";
    o.params = {"instances=100"};
    o.seed = 3;
    CHECK(run_cli(o).code == kExitOk);
    o.command = "resultant-check";
    o.params = {"p=2", "random=50", "k=2..3", "M=1..2"};
    CHECK(run_cli(o).code == kExitOk);
    o.params = {"p=2", "f=1,1|1", "g=0,1|1", "k=2", "M=1"};
    CHECK(run_cli(o).code == kExitOk);
    o.params = {"p=2", "f=0,0,0,1|1", "g=0,1|1", "k=2", "M=1"};
    auto bad = run_cli(o);
    CHECK(bad.code == kExitError);
    CHECK(bad.err.find("HypothesisViolated") != std::string::npos);
}

TEST_CASE("divisor-count sweep matches the maximum table") {
    Options o;
    o.command = "divisor-count";
    o.params = {"p=2", "degree=1..6"};
    o.emit = "jsonl";
    o.timing = false;
    auto r = run_cli(o);
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::vector<u64> best;
    while (std::getline(in, line)) best.push_back(Record::parse(line)["divisors"]);
    CHECK(best == std::vector<u64>{2, 4, 6, 9, 12, 18});
}
