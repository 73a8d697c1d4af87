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

#ifndef QDL_VERIFY_H
#define QDL_VERIFY_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qdl/nonlocality.h"

namespace qdl {

/// One pass/fail condition inside a suite.
struct Check {
    enum class Kind {
        kAtMost,   // value <= bound; the tolerance override replaces bound
        kAtLeast,  // value >= bound
        kCount,    // integer value <= bound, never overridden
        kReport,   // informational, always passes
    };

    std::string name;
    double value = 0;
    double bound = 0;
    Kind kind = Kind::kAtMost;

    bool passed() const;
};

struct SuiteResult {
    std::string name;
    std::string description;
    std::vector<Check> checks;
    /// Preformatted table rows printed under the suite.
    std::vector<std::string> table;

    bool passed() const;
    /// Largest value among kAtMost checks.
    double max_residual() const;
};

struct VerifyOptions {
    /// Points per axis on every grid.
    std::size_t resolution = 13;
    /// Replaces every kAtMost bound when set.
    std::optional<double> tolerance;
    /// Empty runs every suite.
    std::vector<std::string> suites;
    BruteForceOptions brute;
    std::size_t fringe_samples = 1024;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool passed() const;
};

/// Suite names in execution order.
const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string &name, const VerifyOptions &options);

VerifyReport run_verify(const VerifyOptions &options);

void render_verify(const VerifyReport &report, std::ostream &out);

}  // namespace qdl

#endif
