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

#ifndef QDL_FIGURES_H
#define QDL_FIGURES_H

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "qdl/state_factory.h"

namespace qdl {

/// Parameter driven by a sweep axis. kUnpredictability sets r through
/// P = sqrt(1 - U^2); kOverlap sets D = sqrt(1 - O^2).
enum class SweepParam { kDistinguishability, kUnpredictability, kOverlap, kSystemRobustness,
                        kMeterRobustness };

enum class SweepMetric { kBMax, kVisibility, kLrtExplainable, kMutualInformation,
                         kChshViolating, kDThreshold };

struct SweepAxis {
    std::string header;
    SweepParam param;
    double start = 0;
    double stop = 1;
    std::size_t steps = 2;

    /// start + k (stop - start)/(steps - 1), with the last point exactly stop.
    double value(std::size_t k) const;
};

struct SweepOutput {
    std::string header;
    SweepMetric metric;
};

/// A grid over one or two axes (first axis outermost); parameters not on an
/// axis come from `fixed`.
struct SweepSpec {
    Scenario scenario = Scenario::kFree;
    std::vector<SweepAxis> axes;
    ScenarioParams fixed;
    std::vector<SweepOutput> outputs;

    /// Throws std::invalid_argument on a malformed spec.
    void validate() const;
    std::size_t row_count() const;
};

inline constexpr std::size_t kDefaultFigureResolution = 41;
inline constexpr std::size_t kMinFigureResolution = 11;

/// Grid behind figure `number` (1..7) with `resolution` steps per axis.
SweepSpec figure_spec(int number, std::size_t resolution);

/// Evaluates the grid (in parallel) and writes CSV: header row, then one
/// LF-terminated row per point in row-major axis order, 9 decimals.
void write_sweep_csv(const SweepSpec &spec, std::ostream &out);

}  // namespace qdl

#endif
