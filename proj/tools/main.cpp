// Command-line front end: solve / simulate / optimize / sweep / validate.
//
// Exit codes: 0 success, 2 config error, 3 numerical failure,
// 4 validation-threshold failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iqmodel/errors.hpp"
#include "iqmodel/optimizer.hpp"
#include "iqmodel/oracle_sim.hpp"
#include "iqmodel/reports.hpp"
#include "iqmodel/solver.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
};

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw iqm::ConfigError("cannot open output file '" + path.string() + "'");
    }
    return out;
}

int run_solve(const CommonArgs& args) {
    const iqm::ModelConfig config = iqm::load_model_config(args.config_path);
    const iqm::SteadyStateReport report = iqm::solve_model(config);
    const iqm::StateSpace space =
        iqm::StateSpace::enumerate(config.type_count(), config.capacity);

    fs::create_directories(args.out_dir);
    {
        auto out = open_output(fs::path(args.out_dir) / "report.json");
        iqm::write_solve_report(out, report, config);
    }
    {
        auto out = open_output(fs::path(args.out_dir) / "pi.csv");
        iqm::write_pi_csv(out, report.pi, space, config);
    }
    iqm::print_solve_summary(std::cout, report, config);
    return 0;
}

int run_simulate(const CommonArgs& args, long long cycles, long long warmup, std::uint64_t seed) {
    iqm::SimConfig sim;
    sim.model = iqm::load_model_config(args.config_path);
    sim.cycles = cycles;
    sim.warmup = warmup;
    sim.seed = seed;
    const iqm::SimReport report = iqm::run(sim);
    const iqm::StateSpace space =
        iqm::StateSpace::enumerate(sim.model.type_count(), sim.model.capacity);

    fs::create_directories(args.out_dir);
    {
        auto out = open_output(fs::path(args.out_dir) / "sim_report.json");
        iqm::write_sim_report(out, report, sim.model);
    }
    {
        auto out = open_output(fs::path(args.out_dir) / "sim_pi.csv");
        iqm::write_sim_pi_csv(out, report, space, sim.model);
    }
    std::cout << "simulated " << report.cycles << " cycles (warmup " << report.warmup
              << ", seed " << report.seed << ", " << report.generator << ")\n";
    for (int t = 0; t < sim.model.type_count(); ++t) {
        std::cout << "L[" << sim.model.types[static_cast<std::size_t>(t)].name
                  << "] = " << iqm::format_fixed(report.empirical_queue_length[static_cast<std::size_t>(t)])
                  << "\n";
    }
    std::cout << "L_total = " << iqm::format_fixed(report.empirical_total_queue_length) << "\n";
    return 0;
}

int run_optimize(const CommonArgs& args, int fu_max, bool exhaustive) {
    const iqm::ModelConfig config = iqm::load_model_config(args.config_path);
    iqm::FuCostParams costs = iqm::FuCostParams::defaults(config);
    costs.fu_max.assign(static_cast<std::size_t>(config.type_count()), fu_max);
    costs.validate(config.type_count());

    iqm::OptimizationResult result;
    std::optional<std::string> diagnostic;
    std::string algorithm;
    if (exhaustive) {
        algorithm = "grid_search";
        result = iqm::grid_search(config, costs);
        const iqm::OptimizationResult climbed = iqm::hill_climb(config, costs);
        diagnostic = iqm::convexity_violation(climbed, result);
    } else {
        algorithm = "hill_climb";
        result = iqm::hill_climb(config, costs);
    }

    fs::create_directories(args.out_dir);
    {
        auto out = open_output(fs::path(args.out_dir) / "optimize_report.json");
        iqm::write_optimize_report(out, result, config, algorithm, diagnostic);
    }
    std::cout << "best configuration:";
    for (std::size_t t = 0; t < result.best_fu.size(); ++t) {
        std::cout << " " << config.types[t].name << "=" << result.best_fu[t];
    }
    std::cout << "  cost " << iqm::format_fixed(result.best_cost) << "  (" << result.evaluations
              << " evaluations, " << algorithm << ")\n";
    if (diagnostic) {
        std::cout << "warning: " << *diagnostic << "\n";
    }
    return 0;
}

int run_sweep(const CommonArgs& args, int fu_max) {
    const iqm::ModelConfig config = iqm::load_model_config(args.config_path);
    iqm::FuCostParams costs = iqm::FuCostParams::defaults(config);
    costs.fu_max.assign(static_cast<std::size_t>(config.type_count()), fu_max);
    costs.validate(config.type_count());

    const iqm::OptimizationResult result = iqm::grid_search(config, costs);
    fs::create_directories(args.out_dir);
    {
        auto out = open_output(fs::path(args.out_dir) / "surface.csv");
        iqm::write_surface_csv(out, result, config.type_count());
    }
    std::cout << "evaluated " << result.evaluations << " configurations; minimum cost "
              << iqm::format_fixed(result.best_cost) << "\n";
    return 0;
}

int run_validate(const CommonArgs& args, long long cycles, long long warmup, std::uint64_t seed,
                 double threshold) {
    const iqm::ModelConfig config = iqm::load_model_config(args.config_path);
    const iqm::SteadyStateReport analytic = iqm::solve_model(config);

    iqm::SimConfig sim;
    sim.model = config;
    sim.cycles = cycles;
    sim.warmup = warmup;
    sim.seed = seed;
    iqm::SimReport empirical = iqm::run(sim);

    const double tv = iqm::tv_distance(empirical.empirical_pi, analytic.pi);
    empirical.tv_distance = tv;
    const bool passed = tv <= threshold;

    fs::create_directories(args.out_dir);
    {
        auto out = open_output(fs::path(args.out_dir) / "validate_report.json");
        iqm::write_validate_report(out, analytic, empirical, config, tv, threshold, passed);
    }
    std::cout << "TV(empirical, analytic) = " << iqm::format_fixed(tv) << " (threshold "
              << iqm::format_fixed(threshold) << ") -> " << (passed ? "ok" : "FAIL") << "\n";
    return passed ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Issue-queue / functional-unit occupancy model"};
    app.require_subcommand(1);

    CommonArgs args;
    long long cycles = 1'000'000;
    long long warmup = 1'000;
    std::uint64_t seed = 0;
    int fu_max = 8;
    double tv_threshold = 0.02;
    bool exhaustive = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", args.config_path, "model configuration (JSON)")->required();
        cmd->add_option("--out", args.out_dir, "directory for report files");
    };

    CLI::App* solve = app.add_subcommand("solve", "steady state and queue metrics");
    add_common(solve);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo run of the same model");
    add_common(simulate);
    simulate->add_option("--cycles", cycles, "simulated clock cycles");
    simulate->add_option("--warmup", warmup, "cycles discarded before tallying");
    simulate->add_option("--seed", seed, "PRNG seed");

    CLI::App* optimize = app.add_subcommand("optimize", "search FU configurations by cost");
    add_common(optimize);
    optimize->add_option("--fu-max", fu_max, "upper bound per type");
    optimize->add_flag("--exhaustive", exhaustive, "evaluate the whole grid instead of climbing");

    CLI::App* sweep = app.add_subcommand("sweep", "emit the full cost surface as CSV");
    add_common(sweep);
    sweep->add_option("--fu-max", fu_max, "upper bound per type");

    CLI::App* validate = app.add_subcommand("validate", "solve + simulate and compare");
    add_common(validate);
    validate->add_option("--cycles", cycles, "simulated clock cycles");
    validate->add_option("--warmup", warmup, "cycles discarded before tallying");
    validate->add_option("--seed", seed, "PRNG seed");
    validate->add_option("--tv-threshold", tv_threshold, "max allowed total variation distance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(args);
        if (simulate->parsed()) return run_simulate(args, cycles, warmup, seed);
        if (optimize->parsed()) return run_optimize(args, fu_max, exhaustive);
        if (sweep->parsed()) return run_sweep(args, fu_max);
        if (validate->parsed()) return run_validate(args, cycles, warmup, seed, tv_threshold);
    } catch (const iqm::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const iqm::DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const iqm::ModelError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
