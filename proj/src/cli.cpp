#include "stbext/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stbext/errors.hpp"
#include "stbext/invariants.hpp"
#include "stbext/label_enum.hpp"
#include "stbext/oracle.hpp"
#include "stbext/set_enum.hpp"
#include "stbext/trace.hpp"

namespace stbext::cli {

std::optional<Task> parse_task(std::string_view name) {
    if (name == "EE-ST") return Task::Enumerate;
    if (name == "SE-ST") return Task::Some;
    if (name == "CE-ST") return Task::Count;
    return std::nullopt;
}

std::optional<Engine> parse_engine(std::string_view name) {
    if (name == "bruteforce") return Engine::BruteForce;
    if (name == "set") return Engine::Set;
    if (name == "label") return Engine::Label;
    return std::nullopt;
}

std::string_view to_string(Engine engine) {
    switch (engine) {
    case Engine::BruteForce: return "bruteforce";
    case Engine::Set: return "set";
    case Engine::Label: return "label";
    }
    return "?";
}

std::size_t solve(const RunConfig& config, const Framework& f, const ExtensionSink& sink, SearchStats* stats,
                  std::ostream* trace_out) {
    switch (config.engine) {
    case Engine::BruteForce: {
        std::size_t delivered = 0;
        for (const auto& e : oracle::enumerate_bruteforce(f)) {
            ++delivered;
            if (stats) ++stats->solutions;
            if (!sink(e)) break;
        }
        return delivered;
    }
    case Engine::Set: {
        invariants::SetChecker checker(f);
        set_enum::Options options{config.order, config.check_invariants ? &checker : nullptr, stats};
        return set_enum::enumerate(f, sink, options);
    }
    case Engine::Label: {
        invariants::LabelChecker checker(f);
        std::optional<trace::JsonLinesWriter> writer;
        label_enum::ObserverList observers;
        if (config.check_invariants) observers.add(&checker);
        if (trace_out) {
            writer.emplace(*trace_out, f);
            observers.add(&*writer);
        }
        label_enum::Options options{config.order, observers.empty() ? nullptr : &observers, stats};
        return label_enum::enumerate(f, sink, options);
    }
    }
    return 0;
}

int run(const RunConfig& config, const Framework& f, std::ostream& out, std::ostream& err) {
    if (config.trace_path && config.engine != Engine::Label) {
        err << "error: --trace requires the label engine\n";
        return kExitInputError;
    }
    std::ofstream trace_file;
    if (config.trace_path) {
        trace_file.open(*config.trace_path);
        if (!trace_file) {
            err << "error: cannot open trace file '" << *config.trace_path << "'\n";
            return kExitInputError;
        }
    }

    std::optional<std::string> bad;
    std::size_t count = 0;
    const ExtensionSink sink = [&](const Extension& e) {
        if (config.verify && !oracle::is_stable(f, e)) {
            bad = io::format_extension(e, f);
            return false;
        }
        ++count;
        if (config.task == Task::Enumerate) out << io::format_extension(e, f) << '\n';
        if (config.task == Task::Some) {
            out << io::format_extension(e, f) << '\n';
            return false;
        }
        return true;
    };

    try {
        solve(config, f, sink, nullptr, config.trace_path ? &trace_file : nullptr);
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    if (bad) {
        err << "verification failed: " << *bad << " is not a stable extension\n";
        return kExitInternalError;
    }
    if (config.task == Task::Some && count == 0) out << "NO\n";
    if (config.task == Task::Count) out << "COUNT " << count << '\n';
    return kExitOk;
}

int run(const RunConfig& config, std::string_view input, std::ostream& out, std::ostream& err) {
    if (!config.format) {
        err << "error: input format unknown, pass --format apx|tgf\n";
        return kExitInputError;
    }
    Framework f;
    try {
        std::vector<io::ParseDiagnostic> warnings;
        f = io::parse(input, *config.format, &warnings);
        for (const auto& w : warnings) err << "warning: line " << w.line << ": " << w.message << '\n';
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInputError;
    }
    return run(config, f, out, err);
}

gen::GenSpec parse_gen_spec(std::string_view text) {
    std::vector<std::string> parts;
    std::stringstream ss{std::string(text)};
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3 && parts.size() != 4)
        throw std::invalid_argument("generator spec must be n,p,seed[,selfloops]");

    gen::GenSpec spec;
    try {
        std::size_t used = 0;
        spec.n = std::stoul(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("n");
        spec.p = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("p");
        spec.seed = std::stoull(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("seed");
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed generator spec '" + std::string(text) + "'");
    }
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("attack probability must lie in [0, 1]");
    if (parts.size() == 4) {
        if (parts[3] == "selfloops" || parts[3] == "1" || parts[3] == "true")
            spec.allow_self_loops = true;
        else if (parts[3] != "noselfloops" && parts[3] != "0" && parts[3] != "false")
            throw std::invalid_argument("fourth generator field must be selfloops or noselfloops");
    }
    return spec;
}

std::vector<BenchRow> bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (std::uint64_t i = 0; i < config.seeds; ++i) {
        gen::GenSpec spec = config.base;
        spec.seed = config.base.seed + i;
        const Framework f = gen::random_af(spec);

        std::optional<std::size_t> reference;
        Engine reference_engine = Engine::Label;
        for (Engine engine : config.engines) {
            RunConfig rc;
            rc.engine = engine;
            rc.order = config.order;
            BenchRow row;
            row.seed = spec.seed;
            row.engine = engine;
            const auto start = std::chrono::steady_clock::now();
            row.count = solve(rc, f, [](const Extension&) { return true; }, &row.stats);
            row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

            if (!reference) {
                reference = row.count;
                reference_engine = engine;
            } else if (*reference != row.count) {
                throw CountMismatch("seed " + std::to_string(spec.seed) + ": " + std::string(to_string(engine)) +
                                    " found " + std::to_string(row.count) + " extensions, " +
                                    std::string(to_string(reference_engine)) + " found " +
                                    std::to_string(*reference));
            }
            rows.push_back(row);
        }
    }
    return rows;
}

void write_bench_report(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "seed\tengine\tcount\tbranches\tpropagations\tdead_ends\ttime_ms\n";
    for (const auto& r : rows) {
        out << r.seed << '\t' << to_string(r.engine) << '\t' << r.count << '\t' << r.stats.branches << '\t'
            << r.stats.propagations << '\t' << r.stats.dead_ends << '\t' << std::fixed << std::setprecision(3)
            << r.millis << '\n';
        out.unsetf(std::ios_base::floatfield);
    }
}

int run_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
    try {
        write_bench_report(out, bench(config));
    } catch (const CountMismatch& e) {
        err << "count mismatch: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

} // namespace stbext::cli
