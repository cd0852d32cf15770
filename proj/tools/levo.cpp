#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "levo/errors.hpp"
#include "levo/pipeline.hpp"

namespace {

int run(levo::Command command, const std::string& input, std::optional<std::uint64_t> seed,
        std::optional<std::string> format, int retries, bool timing) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "cannot read " << input << "\n";
        return 4;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    levo::JobConfig cfg;
    try {
        cfg = levo::parse_config(buf.str());
    } catch (const levo::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 4;
    }
    if (seed) cfg.seed = *seed;
    if (format) cfg.format = *format;
    levo::RunOptions opts;
    opts.command = command;
    opts.retries = retries;
    opts.timing = timing;
    auto rep = levo::run_pipeline(cfg, opts);
    if (cfg.format == "text")
        std::cout << rep.text;
    else
        std::cout << rep.json.dump(2) << "\n";
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"levo: enriched characteristic cycles and Le-Vogel modules"};
    app.require_subcommand(1);

    std::string input;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    int retries = 0;
    bool timing = false;
    levo::Command command = levo::Command::Compute;

    auto add = [&](const std::string& name, const std::string& help, levo::Command c) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input,-i", input, "job file (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->callback([&command, c] { command = c; });
        return sub;
    };
    auto* compute = add("compute", "run the full pipeline", levo::Command::Compute);
    compute->add_option("--retry", retries, "random coordinate changes to try after a genericity failure")
        ->check(CLI::NonNegativeNumber);
    compute->add_flag("--timing", timing, "include wall-clock time in the report");
    add("check", "transversality and genericity certificate only", levo::Command::Check);
    add("gecc", "print the characteristic cycle and its supports", levo::Command::Gecc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }
    return run(command, input, seed, format, retries, timing);
}
