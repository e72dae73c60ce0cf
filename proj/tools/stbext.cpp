// stbext: enumerate, find or count the stable extensions of an
// argumentation framework read from APX/TGF or produced by a generator.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stbext/cli.hpp"
#include "stbext/errors.hpp"
#include "stbext/generators.hpp"
#include "stbext/io.hpp"

namespace {

using namespace stbext;

bool read_input(const std::string& path, std::string& text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), {});
    return true;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) parts.push_back(item);
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable extension enumeration for abstract argumentation frameworks"};

    std::string input;
    std::string task = "EE-ST";
    std::string engine = "label";
    std::string order = "lex";
    std::string format = "auto";
    std::string gen_spec;
    std::string family_spec;
    std::string trace_path;
    std::string engines_list = "set,label";
    bool verify = false;
    bool check = false;
    bool bench = false;
    bool emit_apx = false;
    std::uint64_t seeds = 1;

    app.add_option("input", input, "Framework file (APX or TGF), - for stdin");
    app.add_option("--task", task, "EE-ST (all), SE-ST (some) or CE-ST (count)")->capture_default_str();
    app.add_option("--engine", engine, "bruteforce, set or label")->capture_default_str();
    app.add_option("--order", order, "Branching order: lex, max-out or max-in")->capture_default_str();
    app.add_option("--format", format, "apx, tgf or auto (from the file suffix)")->capture_default_str();
    app.add_option("--gen", gen_spec, "Random framework n,p,seed[,selfloops]");
    app.add_option("--family", family_spec, "Structured framework NAME,n (cycle, two_cliques, chain)");
    app.add_option("--trace", trace_path, "Write label engine states as JSON lines to PATH");
    app.add_flag("--verify", verify, "Check every reported extension for stability");
    app.add_flag("--check-invariants", check, "Check search state invariants at every step");
    app.add_flag("--emit-apx", emit_apx, "Print the framework in APX and exit");
    app.add_flag("--bench", bench, "Compare engines over consecutive seeds of --gen");
    app.add_option("--seeds", seeds, "Number of seeds for --bench")->capture_default_str();
    app.add_option("--engines", engines_list, "Comma separated engines for --bench")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    cli::RunConfig config;
    config.verify = verify;
    config.check_invariants = check;
    if (!trace_path.empty()) config.trace_path = trace_path;

    const auto parsed_task = cli::parse_task(task);
    const auto parsed_engine = cli::parse_engine(engine);
    const auto parsed_order = parse_pick_order(order);
    if (!parsed_task || !parsed_engine || !parsed_order) {
        std::cerr << "error: unknown " << (!parsed_task ? "task '" + task : !parsed_engine ? "engine '" + engine : "order '" + order)
                  << "'\n";
        return cli::kExitInputError;
    }
    config.task = *parsed_task;
    config.engine = *parsed_engine;
    config.order = *parsed_order;

    const int sources = !input.empty() + !gen_spec.empty() + !family_spec.empty();
    if (sources != 1) {
        std::cerr << "error: give exactly one of an input file, --gen or --family\n";
        return cli::kExitInputError;
    }

    try {
        if (bench) {
            if (gen_spec.empty()) {
                std::cerr << "error: --bench needs --gen\n";
                return cli::kExitInputError;
            }
            cli::BenchConfig bc;
            bc.base = cli::parse_gen_spec(gen_spec);
            bc.seeds = seeds;
            bc.order = config.order;
            bc.engines.clear();
            for (const auto& name : split_commas(engines_list)) {
                const auto e = cli::parse_engine(name);
                if (!e) {
                    std::cerr << "error: unknown engine '" << name << "'\n";
                    return cli::kExitInputError;
                }
                bc.engines.push_back(*e);
            }
            return cli::run_bench(bc, std::cout, std::cerr);
        }

        Framework f;
        if (!gen_spec.empty()) {
            f = gen::random_af(cli::parse_gen_spec(gen_spec));
        } else if (!family_spec.empty()) {
            const auto parts = split_commas(family_spec);
            if (parts.size() != 2) {
                std::cerr << "error: --family expects NAME,n\n";
                return cli::kExitInputError;
            }
            f = gen::family(parts[0], std::stoul(parts[1]));
        } else {
            std::string text;
            if (!read_input(input, text)) {
                std::cerr << "error: cannot read '" << input << "'\n";
                return cli::kExitInputError;
            }
            config.format = format == "auto" ? io::format_from_path(input) : io::parse_format(format);
            if (!config.format) {
                std::cerr << "error: cannot determine input format, pass --format apx|tgf\n";
                return cli::kExitInputError;
            }
            if (!emit_apx) return cli::run(config, std::string_view(text), std::cout, std::cerr);
            f = io::parse(text, *config.format);
        }

        if (emit_apx) {
            std::cout << io::write_apx(f);
            return cli::kExitOk;
        }
        return cli::run(config, f, std::cout, std::cerr);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return cli::kExitInputError;
}
