#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "graviton/engine.hpp"

namespace fs = std::filesystem;
using namespace graviton;

namespace {

constexpr int EXIT_IO = 1;
constexpr int EXIT_VALIDATION = 2;
constexpr int EXIT_INVARIANT = 3;
constexpr int EXIT_AGENT = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::IoError: return EXIT_IO;
        case Errc::InvariantViolation: return EXIT_INVARIANT;
        case Errc::AgentError: return EXIT_AGENT;
        default: return EXIT_VALIDATION;
    }
}

struct RunOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> ticks;
    std::optional<std::uint64_t> audit_every;
    std::string format = "csv";
};

Scenario load_with_overrides(const RunOptions& opt) {
    Scenario sc = load_scenario(opt.config);
    if (opt.seed) sc.run.seed = *opt.seed;
    if (opt.ticks) sc.run.ticks = *opt.ticks;
    if (opt.audit_every) sc.run.audit_every = *opt.audit_every;
    validate_scenario(sc); // overrides go through the same checks
    return sc;
}

std::unique_ptr<MetricsWriter> make_writer(const std::string& format, std::ostream& out) {
    if (format == "csv") return std::make_unique<CsvWriter>(out);
    return std::make_unique<RecordsWriter>(out);
}

// Runs one scenario and writes metrics atomically: temp file in the target
// directory, renamed over the destination only after a clean finish.
RunSummary run_to_file(const Scenario& sc, const std::string& format, const fs::path& out_path) {
    Engine engine(sc);

    const fs::path tmp_path = out_path.string() + ".tmp";
    RunSummary summary;
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        check(out.good(), Errc::IoError, "cannot open '" + tmp_path.string() + "' for writing");
        auto writer = make_writer(format, out);
        try {
            summary = engine.run(*writer);
        } catch (...) {
            out.close();
            std::error_code ec;
            fs::remove(tmp_path, ec);
            throw;
        }
        out.flush();
        check(out.good(), Errc::IoError, "write to '" + tmp_path.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp_path, out_path, ec);
    check(!ec, Errc::IoError, "cannot rename temp file onto '" + out_path.string() + "'");
    return summary;
}

void print_summary(const RunSummary& s, const fs::path& out_path) {
    std::cout << "ticks run:    " << s.ticks_run << "\n"
              << "audits:       " << s.audits << " (all passed)\n"
              << "rgu supply:   " << s.rgu_supply << "\n"
              << "rgu emitted:  " << s.emitted << "\n"
              << "rgu claimed:  " << s.claimed << "\n"
              << "rgu burned:   " << s.burned << "\n"
              << "metrics:      " << out_path.string() << "\n";
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto pos = text.find("..");
    check(pos != std::string::npos, Errc::ValidationError,
          "--seeds expects 'a..b', got '" + text + "'");
    auto parse = [&](const std::string& part) {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        check(ec == std::errc() && p == part.data() + part.size() && !part.empty(),
              Errc::ValidationError, "--seeds expects integers, got '" + part + "'");
        return v;
    };
    const std::uint64_t a = parse(text.substr(0, pos));
    const std::uint64_t b = parse(text.substr(pos + 2));
    check(a <= b, Errc::ValidationError, "--seeds range is empty");
    return {a, b};
}

int cmd_validate(const std::string& config) {
    load_scenario(config);
    std::cout << "OK\n";
    return 0;
}

int cmd_run(const RunOptions& opt, const std::string& out) {
    const Scenario sc = load_with_overrides(opt);
    const RunSummary summary = run_to_file(sc, opt.format, out);
    print_summary(summary, out);
    return 0;
}

int cmd_sweep(const RunOptions& opt, const std::string& seeds, const std::string& out_dir) {
    const auto [first, last] = parse_seed_range(seeds);
    Scenario sc = load_with_overrides(opt);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    check(!ec, Errc::IoError, "cannot create output directory '" + out_dir + "'");

    const std::string stem = fs::path(opt.config).stem().string();
    const std::string ext = opt.format == "csv" ? ".csv" : ".jsonl";
    for (std::uint64_t seed = first;; ++seed) {
        sc.run.seed = seed;
        const fs::path out = fs::path(out_dir) / (stem + "_seed" + std::to_string(seed) + ext);
        const RunSummary summary = run_to_file(sc, opt.format, out);
        std::cout << "seed " << seed << ": " << summary.ticks_run << " ticks, "
                  << summary.audits << " audits -> " << out.string() << "\n";
        if (seed == last) break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic multi-chain liquidity-protocol simulator"};
    app.require_subcommand(1);

    std::string validate_config;
    auto* validate = app.add_subcommand("validate", "Parse and cross-check a scenario file");
    validate->add_option("config", validate_config, "scenario file")->required();

    RunOptions run_opt;
    std::string run_out;
    auto* run = app.add_subcommand("run", "Execute a scenario and write per-tick metrics");
    run->add_option("--config", run_opt.config, "scenario file")->required();
    run->add_option("--seed", run_opt.seed, "override the scenario seed");
    run->add_option("--ticks", run_opt.ticks, "override the run length");
    run->add_option("--audit-every", run_opt.audit_every, "invariant sweep interval in ticks");
    run->add_option("--out", run_out, "metrics output path")->required();
    run->add_option("--format", run_opt.format, "csv | records")
        ->check(CLI::IsMember({"csv", "records"}));

    RunOptions sweep_opt;
    std::string sweep_seeds;
    std::string sweep_dir;
    auto* sweep = app.add_subcommand("sweep", "Run one scenario across a seed range");
    sweep->add_option("--config", sweep_opt.config, "scenario file")->required();
    sweep->add_option("--seeds", sweep_seeds, "inclusive seed range a..b")->required();
    sweep->add_option("--ticks", sweep_opt.ticks, "override the run length");
    sweep->add_option("--audit-every", sweep_opt.audit_every, "invariant sweep interval in ticks");
    sweep->add_option("--out-dir", sweep_dir, "directory for per-seed metrics files")->required();
    sweep->add_option("--format", sweep_opt.format, "csv | records")
        ->check(CLI::IsMember({"csv", "records"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; genuine usage errors count as validation failures
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_VALIDATION;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_config);
        if (run->parsed()) return cmd_run(run_opt, run_out);
        return cmd_sweep(sweep_opt, sweep_seeds, sweep_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_VALIDATION;
    }
}
