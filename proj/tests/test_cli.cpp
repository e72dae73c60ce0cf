#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "stbext/cli.hpp"
#include "stbext/errors.hpp"

using namespace stbext;
using namespace stbext::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_text(const RunConfig& config, std::string_view text) {
    std::ostringstream out, err;
    const int code = run(config, text, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(Task task, Engine engine, io::Format format = io::Format::Apx) {
    RunConfig c;
    c.task = task;
    c.engine = engine;
    c.format = format;
    return c;
}

constexpr const char* kCycle3 = "arg(x).arg(y).arg(z).att(x,y).att(y,z).att(z,x).";

// Runs the installed binary through the shell; stdout only.
Result exec(const std::string& args) {
    const char* bin = std::getenv("STBEXT_BIN");
    if (!bin) return {-1, "", "STBEXT_BIN not set"};
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    std::array<char, 256> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

} // namespace

TEST_CASE("task parsing") {
    CHECK(parse_task("EE-ST") == Task::Enumerate);
    CHECK(parse_task("SE-ST") == Task::Some);
    CHECK(parse_task("CE-ST") == Task::Count);
    CHECK_FALSE(parse_task("DC-ST"));
    CHECK(parse_engine("set") == Engine::Set);
    CHECK_FALSE(parse_engine("sat"));
    CHECK(parse_pick_order("max-out") == PickOrder::MaxOut);
    CHECK(to_string(PickOrder::MaxIn) == "max-in");
}

TEST_CASE("enumerate H1 with every engine") {
    for (auto engine : {Engine::BruteForce, Engine::Set, Engine::Label}) {
        const auto r = run_text(config(Task::Enumerate, engine), testing::h1_apx());
        CHECK(r.code == kExitOk);
        CHECK(r.out == "[a,c,d]\n[b,e]\n");
        const auto t = run_text(config(Task::Enumerate, engine, io::Format::Tgf), testing::h1_tgf());
        CHECK(t.out == "[a,c,d]\n[b,e]\n");
    }
}

TEST_CASE("count, some, none") {
    CHECK(run_text(config(Task::Count, Engine::Label), "").out == "COUNT 1\n");
    CHECK(run_text(config(Task::Enumerate, Engine::Set), "").out == "[]\n");
    CHECK(run_text(config(Task::Some, Engine::Label), kCycle3).out == "NO\n");
    CHECK(run_text(config(Task::Some, Engine::Set), kCycle3).out == "NO\n");
    CHECK(run_text(config(Task::Some, Engine::Label), testing::h1_apx()).out == "[a,c,d]\n");
    CHECK(run_text(config(Task::Count, Engine::BruteForce), testing::h1_apx()).out == "COUNT 2\n");
    CHECK(run_text(config(Task::Enumerate, Engine::Label), kCycle3).out.empty());
}

TEST_CASE("verify and invariant checks pass quietly") {
    RunConfig c = config(Task::Enumerate, Engine::Label);
    c.verify = true;
    c.check_invariants = true;
    const auto r = run_text(c, testing::h1_apx());
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
    c.engine = Engine::Set;
    CHECK(run_text(c, testing::h1_apx()).code == kExitOk);
}

TEST_CASE("parse errors exit 1") {
    const auto r = run_text(config(Task::Enumerate, Engine::Label), "att(a,b).");
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("line 1") != std::string::npos);
    CHECK(run_text(config(Task::Enumerate, Engine::Label, io::Format::Tgf), "1\n2\n1 2\n").code == kExitInputError);

    RunConfig no_format;
    CHECK(run_text(no_format, "arg(a).").code == kExitInputError);
}

TEST_CASE("brute force guard") {
    const Framework big = gen::random_af({30, 0.1, false, 1});
    std::ostringstream out, err;
    CHECK(run(config(Task::Count, Engine::BruteForce), big, out, err) == kExitInputError);
    CHECK(err.str().find("30") != std::string::npos);
}

TEST_CASE("trace requires the label engine") {
    RunConfig c = config(Task::Enumerate, Engine::Set);
    c.trace_path = "unused.jsonl";
    CHECK(run_text(c, testing::h1_apx()).code == kExitInputError);
}

TEST_CASE("trace output") {
    const auto path = std::filesystem::temp_directory_path() / "stbext_cli_trace.jsonl";
    RunConfig c = config(Task::Enumerate, Engine::Label);
    c.trace_path = path.string();
    REQUIRE(run_text(c, testing::h1_apx()).code == kExitOk);
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] ==
          R"({"state_id":1,"event":"init","dead_end":false,"mu":{"a":"blank","b":"blank","c":"blank","d":"blank","e":"blank","f":"blank"},"pi":{"a":2,"b":2,"c":2,"d":1,"e":1,"f":2},"gamma":[]})");
    CHECK(lines[10] ==
          R"({"state_id":9,"event":"assign_in","dead_end":true,"mu":{"a":"must_out","b":"out","c":"blank","d":"in","e":"out","f":"out"},"pi":{"a":0,"b":1,"c":0,"d":0,"e":1,"f":1},"gamma":["c","f"]})");
    std::filesystem::remove(path);
}

TEST_CASE("generator spec") {
    const auto s = parse_gen_spec("12,0.2,5");
    CHECK(s.n == 12);
    CHECK(s.p == 0.2);
    CHECK(s.seed == 5);
    CHECK_FALSE(s.allow_self_loops);
    CHECK(parse_gen_spec("3,1,0,selfloops").allow_self_loops);
    CHECK_THROWS_AS(parse_gen_spec("3,0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gen_spec("3,x,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gen_spec("3,2,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gen_spec("3,0.5,1,maybe"), std::invalid_argument);
}

TEST_CASE("bench agrees across engines") {
    BenchConfig bc;
    bc.base = {12, 0.2, false, 1};
    bc.seeds = 50;
    const auto rows = bench(bc);
    REQUIRE(rows.size() == 100);
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        CHECK(rows[i].seed == rows[i + 1].seed);
        CHECK(rows[i].count == rows[i + 1].count);
        CHECK(rows[i].stats.solutions == rows[i].count);
    }

    std::ostringstream report;
    write_bench_report(report, rows);
    CHECK(report.str().rfind("seed\tengine\tcount\tbranches\tpropagations\tdead_ends\ttime_ms\n", 0) == 0);
}

TEST_CASE("bench with one engine and with the guard") {
    BenchConfig one;
    one.base = {8, 0.3, true, 3};
    one.seeds = 4;
    one.engines = {Engine::Label};
    CHECK(bench(one).size() == 4);

    BenchConfig big;
    big.base = {30, 0.1, false, 1};
    big.engines = {Engine::Label, Engine::BruteForce};
    CHECK_THROWS_AS(bench(big), TooLarge);
    std::ostringstream out, err;
    CHECK(run_bench(big, out, err) == kExitInputError);
}

TEST_CASE("binary end to end") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto apx = dir / "stbext_h1.apx";
    const auto bad = dir / "stbext_bad.apx";
    std::ofstream(apx) << testing::h1_apx();
    std::ofstream(bad) << "att(a,b).";

    auto r = exec(apx.string());
    CHECK(r.code == 0);
    CHECK(r.out == "[a,c,d]\n[b,e]\n");
    CHECK(exec(apx.string() + " --task CE-ST --engine set --verify --check-invariants").out == "COUNT 2\n");
    CHECK(exec(bad.string()).code == 1);
    CHECK(exec("--family cycle,3 --task SE-ST").out == "NO\n");
    CHECK(exec("--gen 6,1,0,selfloops --task CE-ST").out == "COUNT 0\n");
    CHECK(exec("--gen 12,0.2,1 --bench --seeds 5").code == 0);
    CHECK(exec("--gen 30,0.1,1 --bench --engines label,bruteforce").code == 1);
    CHECK(exec("--gen 9,0.3,4 --emit-apx").out == io::write_apx(gen::random_af({9, 0.3, false, 4})));
    std::filesystem::remove(apx);
    std::filesystem::remove(bad);
}
