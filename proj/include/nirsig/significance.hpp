// Copyright (c) 2026 The nirsig authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NIRSIG_SIGNIFICANCE_HPP
#define NIRSIG_SIGNIFICANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nirsig/binomial.hpp"
#include "nirsig/evaluation.hpp"

namespace nirsig {

enum class BaselineKind {
    Random,   // 1/C
    Nir,      // No Information Rate
    Explicit, // user-supplied p
};

/// Which expected success probability the test runs against.
struct BaselineSpec {
    BaselineKind kind = BaselineKind::Nir;
    std::optional<double> explicit_p;

    static BaselineSpec random() { return {BaselineKind::Random, std::nullopt}; }
    static BaselineSpec nir() { return {BaselineKind::Nir, std::nullopt}; }
    static BaselineSpec explicit_probability(double p) {
        return {BaselineKind::Explicit, p};
    }
};

enum class TestMethod {
    Exact,
    NormalApproximation,
    Auto, // exact decision plus an advisory z-statistic
};

enum class WarningCode {
    DegenerateBaseline,
    AccuracyBelowBaseline,
    MpqGateFailed,
    MajorityTie,
    TwoTailedClamped,
};

struct Warning {
    WarningCode code;
    std::string message;
};

struct TestSpec {
    BaselineSpec baseline;
    double alpha = 0.05;
    Sidedness sidedness = Sidedness::OneTailed;
    TestMethod method = TestMethod::Auto;
    bool clamp_two_tailed = true;
    bool continuity_correction = true;
};

/// Baseline probability plus the metadata that produced it.
struct ResolvedBaseline {
    double p = 0.0;
    BaselineKind kind = BaselineKind::Explicit;
    std::optional<MajorityClass> majority;       // NIR only
    std::optional<double> training_majority_prior; // NIR only: max P(a)
};

/// Full result bundle of one significance test run.
struct TestOutcome {
    std::int64_t m = 0;
    std::int64_t t = 0;
    double accuracy = 0.0;
    BaselineKind baseline_kind = BaselineKind::Explicit;
    double p = 0.0;
    double q = 1.0; // always exactly 1 - p
    Sidedness sidedness = Sidedness::OneTailed;
    TestMethod requested_method = TestMethod::Auto;
    PValue pval;
    std::optional<ZStatistic> z;
    double alpha = 0.05;
    bool significant = false;
    std::vector<Warning> warnings;
    std::optional<ClassId> majority_class;
    std::optional<double> training_majority_prior;
};

/// Baseline p per the spec: NIR (computed on the evaluation set against the
/// training-majority class), 1/C, or the explicit value.
ResolvedBaseline resolve_baseline_details(const BaselineSpec& spec,
                                          const ClassPriors* priors,
                                          const EvaluationSet& eval);

double resolve_baseline(const BaselineSpec& spec, const ClassPriors* priors,
                        const EvaluationSet& eval);

/// Inclusive decision rule: significant iff pval <= alpha.
bool decide(const PValue& pval, double alpha);

/// Runs the whole procedure: counts successes, resolves the baseline, runs
/// the configured binomial test (or its normal approximation) and applies
/// the alpha decision rule. `priors` is required for the NIR baseline.
TestOutcome run_significance_test(const EvaluationSet& eval, const TestSpec& spec,
                                  const ClassPriors* priors = nullptr);

const char* to_string(BaselineKind kind);
const char* to_string(TestMethod method);
const char* to_string(Sidedness sidedness);
const char* to_string(TailMethod method);
const char* to_string(WarningCode code);

} // namespace nirsig

#endif // NIRSIG_SIGNIFICANCE_HPP
