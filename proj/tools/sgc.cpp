/******************************************************************************
 * sgc.cpp
 *****************************************************************************/

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sgc/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"sgc -- streaming graph clustering with memetic quotient refinement "
                 "and re-streaming local search"};

    std::string graph_path;
    std::string mode_str = "light";
    sgc::mode_config cfg;

    app.add_option("graph", graph_path, "input graph in METIS node-stream format")->required();
    app.add_option("--mode", mode_str, "light | light-plus | evo | strong")
        ->capture_default_str();
    app.add_option("--evo-time", cfg.evo_time_s,
                   "wall-clock budget for the evolutionary rounds [s]")
        ->capture_default_str();
    app.add_option("--evo-iterations", cfg.evo_iterations,
                   "deterministic evolutionary iteration budget (test mode; overrides --evo-time)");
    app.add_option("--population", cfg.population_size, "memetic population size")
        ->capture_default_str();
    app.add_option("--ls-time", cfg.ls_time_s, "wall-clock budget for local search [s]")
        ->capture_default_str();
    app.add_option("--ls-floor", cfg.ls_floor,
                   "relative per-round gain floor X in [0,1]; a round must gain at least "
                   "X * Q_total to continue")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_flag("--sanitize", cfg.sanitize,
                 "merge parallel edges and drop self-loops instead of rejecting them");
    app.add_flag("--verbose", cfg.verbose, "per-round local search progress on stderr");
    app.add_option("--output", cfg.output_path,
                   "clustering output path (default: <graph>.<mode>.clustering)");
    app.add_option("--stats-json", cfg.stats_json_path, "write run statistics as JSON");
    app.add_option("--truth", cfg.truth_path,
                   "ground-truth labels (one per line); enables NMI evaluation");
    app.add_flag("--audit", cfg.audit,
                 "cross-check the reported modularity with an independent second pass");
    app.add_option("--quotient-dump", cfg.quotient_dump_path,
                   "write the quotient graph in METIS format (evo/strong only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    const auto mode = sgc::parse_mode(mode_str);
    if (!mode) {
        std::cerr << "invalid mode '" << mode_str << "'; expected light | light-plus | evo | strong\n";
        return 3;
    }
    cfg.mode = *mode;

    try {
        const sgc::run_result result = sgc::run(cfg, graph_path);
        std::cout << sgc::to_key_values(result.stats) << " output=" << result.output_path << '\n';
        return 0;
    } catch (const sgc::io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    } catch (const sgc::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
