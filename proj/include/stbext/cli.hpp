#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stbext/framework.hpp"
#include "stbext/generators.hpp"
#include "stbext/io.hpp"
#include "stbext/search.hpp"

namespace stbext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;    // parse errors, bad flags, size guard
inline constexpr int kExitInternalError = 2; // invariant or verification failure

enum class Task {
    Enumerate, // EE-ST
    Some,      // SE-ST
    Count,     // CE-ST
};

enum class Engine { BruteForce, Set, Label };

std::optional<Task> parse_task(std::string_view name);
std::optional<Engine> parse_engine(std::string_view name);
std::string_view to_string(Engine engine);

struct RunConfig {
    Task task = Task::Enumerate;
    Engine engine = Engine::Label;
    std::optional<io::Format> format; // required when running on raw text
    PickOrder order = PickOrder::Lex;
    bool check_invariants = false;
    std::optional<std::string> trace_path;
    bool verify = false;
};

// Runs the engine selected by `config` and delivers extensions to `sink`.
// Invariant hooks and the trace writer are attached as configured; trace
// output goes to `trace_out`. Returns the number of delivered extensions.
std::size_t solve(const RunConfig& config, const Framework& f, const ExtensionSink& sink, SearchStats* stats = nullptr,
                  std::ostream* trace_out = nullptr);

// Solves `f` and prints the task output to `out`; problems go to `err`.
// Returns one of the exit codes above.
int run(const RunConfig& config, const Framework& f, std::ostream& out, std::ostream& err);

// Parses `input` in config.format first.
int run(const RunConfig& config, std::string_view input, std::ostream& out, std::ostream& err);

// "n,p,seed" or "n,p,seed,selfloops"; throws std::invalid_argument.
gen::GenSpec parse_gen_spec(std::string_view text);

struct BenchConfig {
    gen::GenSpec base;          // seed is the first seed
    std::uint64_t seeds = 1;    // consecutive seeds starting at base.seed
    std::vector<Engine> engines{Engine::Set, Engine::Label};
    PickOrder order = PickOrder::Lex;
};

struct BenchRow {
    std::uint64_t seed = 0;
    Engine engine = Engine::Label;
    std::size_t count = 0;
    SearchStats stats;
    double millis = 0.0;
};

// Runs every engine on every instance. Throws CountMismatch naming the seed
// when engines disagree, TooLarge when brute force is asked for n > 25.
std::vector<BenchRow> bench(const BenchConfig& config);

void write_bench_report(std::ostream& out, const std::vector<BenchRow>& rows);

int run_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

} // namespace stbext::cli
