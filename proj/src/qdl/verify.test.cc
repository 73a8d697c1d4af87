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

#include "qdl/verify.h"

#include <sstream>

#include "gtest/gtest.h"

using namespace qdl;

namespace {

VerifyOptions fast_options() {
    VerifyOptions options;
    options.resolution = 5;
    options.brute.restarts = 8;
    options.fringe_samples = 256;
    return options;
}

}  // namespace

TEST(verify, suites_pass_at_low_resolution) {
    for (const std::string &name : suite_names()) {
        const SuiteResult r = run_suite(name, fast_options());
        EXPECT_TRUE(r.passed()) << name;
        EXPECT_FALSE(r.checks.empty()) << name;
    }
}

TEST(verify, tolerance_override_can_fail_a_suite) {
    VerifyOptions options = fast_options();
    options.tolerance = 1e-18;
    EXPECT_FALSE(run_suite("identities", options).passed() && run_suite("closed_form", options).passed());
}

TEST(verify, unknown_suite_is_rejected) {
    EXPECT_THROW(run_suite("nope", fast_options()), std::invalid_argument);
}

TEST(verify, discrepancy_suites_report_tables) {
    for (const char *name : {"p_definition", "ppt_polarity", "meter_threshold", "meter_sb"}) {
        const SuiteResult r = run_suite(name, fast_options());
        EXPECT_TRUE(r.passed()) << name;
        EXPECT_FALSE(r.table.empty()) << name;
    }
}

TEST(verify, render_summary_line) {
    VerifyOptions options = fast_options();
    options.suites = {"identities", "ppt"};
    std::ostringstream out;
    render_verify(run_verify(options), out);
    const std::string text = out.str();
    EXPECT_NE(text.find("suite identities: PASS"), std::string::npos);
    EXPECT_NE(text.find("summary: 2/2 suites passed"), std::string::npos);
}
