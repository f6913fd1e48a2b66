#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

using namespace fct::cli;

int main(int argc, char** argv) {
    CLI::App app{"Reducibility and discharging checks for planar configurations"};
    app.require_subcommand(1);

    std::string file;
    int degree = 0;
    auto* validate = app.add_subcommand("validate", "Parse and validate a graph, configuration, rule or presentation file");
    validate->add_option("file", file)->required();
    validate->add_option("--degree", degree, "Hub degree of a presentation file");

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "Test every configuration for D-reducibility");
    reduce->add_option("configs", ra.configs)->required();
    reduce->add_option("--jobs,-j", ra.jobs)->check(CLI::PositiveNumber);
    reduce->add_option("--filter", ra.filter, "e.g. ring<=11,internal>2");
    reduce->add_option("--report", ra.report, "Write the TSV report here instead of stdout");
    reduce->add_flag("--no-timing", ra.no_timing, "Omit elapsed times so reports are reproducible");
    reduce->add_option("--max-ring", ra.max_ring);
    reduce->add_option("--max-rounds", ra.max_rounds, "Give up after this many rounds (0 = no limit)");
    reduce->add_option("--max-millis", ra.max_millis, "Give up after this long per configuration (0 = no limit)");

    DischargeArgs da;
    auto* discharge = app.add_subcommand("discharge", "Run presentation files against rules and configurations");
    discharge->add_option("--rules", da.rules)->required();
    discharge->add_option("--configs", da.configs)->required();
    discharge->add_option("--present", da.present, "Directory holding present<d>.txt")->required();
    discharge->add_option("--degrees", da.degrees, "e.g. 5..11 or 5,7");
    discharge->add_option("--jobs,-j", da.jobs)->check(CLI::PositiveNumber);
    discharge->add_flag("--verbose", da.verbose);
    discharge->add_flag("--radius-warn", da.radius_warn, "Warn about configurations of radius > 2 instead of failing");

    OverchargeArgs oa;
    auto* overcharge = app.add_subcommand("overcharge", "Bound the charge a rule set moves along one edge");
    overcharge->add_option("--rules", oa.rules)->required();
    overcharge->add_option("--configs", oa.configs)->required();
    overcharge->add_option("--bound", oa.bound, "Threshold in tenths, e.g. 5/10");
    overcharge->add_flag("--radius-warn", oa.radius_warn, "Warn about configurations of radius > 2 instead of failing");

    std::string stats_file;
    auto* stats = app.add_subcommand("stats", "Ring size histogram");
    stats->add_option("configs", stats_file)->required();

    std::string graph_file;
    int face = -1;
    auto* oracle = app.add_subcommand("oracle", "Independent checks");
    auto* consistency = oracle->add_subcommand("consistency", "Lifted colourings of a graph with a wrapped ring are consistent");
    consistency->add_option("graph", graph_file)->required();
    consistency->add_option("--face", face, "Face to wrap (default: the longest)");
    oracle->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kInputError;
    }

    if (*validate) return cmd_validate(file, degree, std::cout, std::cerr);
    if (*reduce) return cmd_reduce(ra, std::cout, std::cerr);
    if (*discharge) return cmd_discharge(da, std::cout, std::cerr);
    if (*overcharge) return cmd_overcharge(oa, std::cout, std::cerr);
    if (*stats) return cmd_stats(stats_file, std::cout, std::cerr);
    if (*consistency) return cmd_oracle_consistency(graph_file, face, std::cout, std::cerr);
    return kInputError;
}
