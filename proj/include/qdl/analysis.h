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

#ifndef QDL_ANALYSIS_H
#define QDL_ANALYSIS_H

#include <optional>
#include <ostream>

#include "qdl/entanglement.h"
#include "qdl/nonlocality.h"
#include "qdl/state_factory.h"

namespace qdl {

struct Classifications {
    bool chsh_violating = false;
    /// System decoherence: V <= 1 - D^2. Elsewhere: no CHSH violation.
    bool lrt_explainable = true;
    bool entangled = false;
    /// Absent where the scenario has no information threshold.
    std::optional<bool> above_info_threshold;
};

/// Everything computed for one scenario point.
struct AnalysisReport {
    Scenario scenario = Scenario::kFree;
    ScenarioParams params;
    double v = 0;
    double p = 0;
    BellResult bell;
    ViolationBoundary boundary;
    SeparabilityReport sep;
    InformationReport info;
    Classifications classifications;
};

struct AnalyzeOptions {
    /// Runs the brute-force CHSH oracle when set.
    std::optional<BruteForceOptions> brute;
};

AnalysisReport analyze(Scenario scenario, const ScenarioParams &params,
                       const AnalyzeOptions &options = {});

/// Deterministic key=value rendering, one quantity per line.
void render_report(const AnalysisReport &report, std::ostream &out);

/// Fixed-point with `decimals` digits, '.' separator, no negative zero.
std::string format_fixed(double value, int decimals = 9);

}  // namespace qdl

#endif
