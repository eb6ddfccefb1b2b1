// Command-line front end: reads a JSON run config, executes the checks and
// writes a JSON report. Exit status: 0 all pass, 1 a check failed or errored,
// 2 config or usage error.

#include "yangian/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw yangian::ConfigError("cannot open config file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw yangian::ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

int cmd_list(bool as_json) {
    const auto& checks = yangian::list_checks();
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : checks) out.push_back({{"name", c.name}, {"description", c.description}, {"anchor", c.anchor}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& c : checks) std::cout << c.name << "\t" << c.description << "\t[" << c.anchor << "]\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for rational Yangian representations"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run the checks named in a config file");
    std::string config_path, output_path;
    std::vector<std::string> check_override;
    int order = 0;
    bool parallel = false, no_timing = false, quiet = false;
    run_cmd->add_option("-c,--config", config_path, "JSON run config")->required();
    run_cmd->add_option("--check", check_override, "run only this check (repeatable; replaces the config list)");
    run_cmd->add_option("-K,--order", order, "series order K (overrides the config)");
    run_cmd->add_option("-o,--output", output_path, "report path (overrides the config; '-' for stdout)");
    run_cmd->add_flag("--parallel", parallel, "run checks concurrently");
    run_cmd->add_flag("--no-timing", no_timing, "omit timing fields from the report");
    run_cmd->add_flag("-q,--quiet", quiet, "no per-check summary on stderr");

    auto* list_cmd = app.add_subcommand("list-checks", "list the registered checks");
    bool list_json = false;
    list_cmd->add_flag("--json", list_json, "print as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (*list_cmd) return cmd_list(list_json);

    yangian::Report report;
    try {
        yangian::RunConfig cfg = yangian::parse_config(read_json(config_path));
        if (!check_override.empty()) cfg.checks = check_override;
        if (order != 0) cfg.order = order;
        if (!output_path.empty()) cfg.output = output_path;
        report = yangian::run(cfg, parallel);
    } catch (const yangian::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const yangian::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    const std::string text = report.to_json(!no_timing).dump(2) + "\n";
    const std::string& dest = report.config.output;
    if (dest.empty() || dest == "-") {
        std::cout << text;
    } else {
        std::ofstream out(dest);
        if (!out) {
            std::cerr << "cannot write report to '" << dest << "'\n";
            return kExitConfig;
        }
        out << text;
    }
    if (!quiet)
        for (const auto& r : report.records) std::cerr << r.status << "  " << r.name << "\n";
    return report.all_pass() ? 0 : kExitFail;
}
