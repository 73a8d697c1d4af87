// Copyright 2026 The qdl Authors
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

// qdl: single-point analysis, figure grids and the verification suite.
//
//   qdl analyze --scenario system --d 0.8 --r-s 0.6
//   qdl figure 1 --resolution 41 --out fig1.csv
//   qdl verify [--suite NAME] [--tolerance X]
//
// Exit codes: 0 success, 1 verification failure, 2 argument or I/O error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdl/analysis.h"
#include "qdl/figures.h"
#include "qdl/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Complementarity, nonlocality and entanglement of monitored two-qubit states"};
    app.require_subcommand(1);

    std::string scenario_name = "free";
    qdl::ScenarioParams params;
    std::size_t resolution = 0;
    std::string out_path;
    std::uint64_t seed = qdl::BruteForceOptions{}.seed;
    int restarts = qdl::BruteForceOptions{}.restarts;
    bool skip_brute = false;

    auto *analyze = app.add_subcommand("analyze", "Analyze one scenario point");
    analyze->add_option("--scenario", scenario_name, "free|system|meter|combined")
        ->check(CLI::IsMember({"free", "system", "meter", "combined"}));
    analyze->add_option("--d", params.d, "Distinguishability D");
    analyze->add_option("--r", params.r, "Path weight r (free scenario only)");
    analyze->add_option("--r-s", params.r_s, "System robustness R_S");
    analyze->add_option("--r-m", params.r_m, "Meter robustness R_M");
    analyze->add_option("--seed", seed, "Seed of the brute-force CHSH starts");
    analyze->add_option("--restarts", restarts, "Brute-force CHSH restarts")->check(CLI::PositiveNumber);
    analyze->add_flag("--no-brute", skip_brute, "Skip the brute-force CHSH optimizer");

    int figure_number = 0;
    auto *figure = app.add_subcommand("figure", "Write the data grid behind a figure as CSV");
    figure->add_option("n", figure_number, "Figure number 1..7")->required()->check(CLI::Range(1, 7));
    figure->add_option("--resolution", resolution, "Steps per axis (>= 11, default 41)");
    figure->add_option("--out", out_path, "Output CSV path (default stdout)");

    std::vector<std::string> suites;
    std::optional<double> tolerance;
    auto *verify = app.add_subcommand("verify", "Run the identity and oracle suites");
    verify->add_option("--resolution", resolution, "Grid points per axis (default 13)");
    verify->add_option("--suite", suites, "Run only the named suite(s)")
        ->check(CLI::IsMember(qdl::suite_names()));
    verify->add_option("--tolerance", tolerance, "Override every residual tolerance");
    verify->add_option("--seed", seed, "Seed of the brute-force CHSH starts");
    verify->add_option("--restarts", restarts, "Brute-force CHSH restarts")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    qdl::BruteForceOptions brute;
    brute.seed = seed;
    brute.restarts = restarts;

    try {
        if (*analyze) {
            const qdl::Scenario scenario = qdl::parse_scenario(scenario_name);
            qdl::AnalyzeOptions options;
            if (!skip_brute) {
                options.brute = brute;
            }
            const qdl::AnalysisReport report = qdl::analyze(scenario, params, options);
            qdl::render_report(report, std::cout);
            return kExitOk;
        }

        if (*figure) {
            const qdl::SweepSpec spec =
                qdl::figure_spec(figure_number, resolution ? resolution : qdl::kDefaultFigureResolution);
            if (out_path.empty()) {
                qdl::write_sweep_csv(spec, std::cout);
                return kExitOk;
            }
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot open " << out_path << " for writing\n";
                return kExitUsage;
            }
            qdl::write_sweep_csv(spec, file);
            file.close();
            if (!file) {
                std::cerr << "error: failed writing " << out_path << '\n';
                return kExitUsage;
            }
            return kExitOk;
        }

        qdl::VerifyOptions options;
        if (resolution) {
            options.resolution = resolution;
        }
        options.tolerance = tolerance;
        options.suites = suites;
        options.brute = brute;
        const qdl::VerifyReport report = qdl::run_verify(options);
        qdl::render_verify(report, std::cout);
        return report.passed() ? kExitOk : kExitVerifyFailed;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
