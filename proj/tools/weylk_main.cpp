#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylk/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the W(E6) class table, torus fixed sets, "
                 "component-group duality, sector cohomology and K-theory"};
    app.require_subcommand(1);

    weylk::cli::RunConfig cfg;
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"classes", "Conjugacy class table with centraliser and elementary-part checks"},
        {"fixed-sets", "Per-class torus fixed sets and component data on each side"},
        {"duality", "Component-group duality, twisted pairing and the minor-gcd sweep"},
        {"sectors", "Per-class sector Betti numbers"},
        {"ktheory", "Sector table with K-theory totals for both forms"},
        {"power-map", "Prime-power map on classes with centraliser inclusions"},
        {"verify-all", "Every suite in dependency order with a summary report"},
        {"dump", "Root system, group and class partition as a JSON document"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--side", cfg.side, "Torus side: root, weight or both")
            ->check(CLI::IsMember({"root", "weight", "both"}))
            ->capture_default_str();
        sub->add_option("--format", cfg.format, "Report format: json, md or csv")
            ->check(CLI::IsMember({"json", "md", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
        sub->add_option("--jobs", cfg.jobs, "Parallel per-class workers")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--sample", cfg.sample, "Random elements in the minor-gcd sweep")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--cache", cfg.cache, "Group cache file (written on miss, read on hit)");
        sub->add_option("--cartan", cfg.cartan,
                        "JSON file with a custom simply-laced Cartan matrix");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1; --help stays 0
    }

    cfg.command = app.get_subcommands().front()->get_name();
    return weylk::cli::run(cfg, std::cout, std::cerr);
}
