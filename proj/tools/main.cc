// Copyright 2026 The insqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "insqec/errors.h"
#include "insqec/experiment.h"

namespace {

nlohmann::json read_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw insqec::ConfigError("cannot open config file '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw insqec::ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Insertion-error simulation for gnu permutation-invariant codes"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path, out_path, format, position;
    std::optional<uint64_t> seed, shots;
    std::optional<int> g, n, u;
    app.add_option("--config", config_path, "JSON experiment config");
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--shots", shots, "Number of Monte Carlo shots");
    app.add_option("--g", g, "Code gap g >= 2");
    app.add_option("--n", n, "Occupancy n >= 2");
    app.add_option("--u", u, "Scaling u >= 1");
    app.add_option("--a", position, "Insertion position 0..N or 'random'");
    app.add_option("--out", out_path, "Write the report to this file");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    app.add_subcommand("single", "One encode, insert, syndrome and teleport run");
    app.add_subcommand("montecarlo", "Sampled syndrome frequencies against the analytic distribution");
    app.add_subcommand("lemma", "Equal-norm checks over a grid of codes");
    app.add_subcommand("example", "The four-qubit code worked example");
    app.add_subcommand("sweep", "Per-position distributions over a grid of codes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    insqec::Report report;
    std::vector<std::string> warnings;
    insqec::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = insqec::parse_config(read_config(config_path), warnings);
        }
        cfg.mode = app.get_subcommands().front()->get_name();
        if (seed) {
            cfg.seed = *seed;
        }
        if (shots) {
            cfg.shots = *shots;
        }
        if (g) {
            cfg.g = *g;
        }
        if (n) {
            cfg.n = *n;
        }
        if (u) {
            cfg.u = *u;
        }
        if (!position.empty()) {
            if (position == "random") {
                cfg.position.reset();
            } else {
                try {
                    std::size_t used = 0;
                    cfg.position = std::stoi(position, &used);
                    if (used != position.size()) {
                        throw std::invalid_argument(position);
                    }
                } catch (const std::logic_error &) {
                    throw insqec::ConfigError("--a must be an integer or 'random'");
                }
            }
        }
        if (!format.empty()) {
            cfg.format = format;
        }
        if ((g || n || u) && !cfg.grid && (cfg.mode == "lemma" || cfg.mode == "sweep")) {
            cfg.grid = std::vector<std::array<int, 3>>{{cfg.g, cfg.n, cfg.u}};
        }
        insqec::check_config(cfg);
        report = insqec::run(cfg);
    } catch (const insqec::ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const insqec::ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
    for (const auto &w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    if (!warnings.empty()) {
        report.body["warnings"] = warnings;
    }

    std::string text;
    if (cfg.format == "csv" && !report.csv.empty()) {
        text = report.csv;
    } else {
        if (cfg.format == "csv") {
            std::cerr << "warning: mode '" << cfg.mode << "' has no table; writing JSON\n";
        }
        text = report.body.dump(2) + "\n";
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 1;
        }
        out << text;
    }
    return report.exit_code;
}
