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

#include "nirsig/significance.hpp"

#include <cmath>
#include <sstream>

#include "nirsig/errors.hpp"

namespace nirsig {

namespace {

std::string format_probability(double p) {
    std::ostringstream out;
    out.precision(6);
    out << p;
    return out.str();
}

} // namespace

ResolvedBaseline resolve_baseline_details(const BaselineSpec& spec,
                                          const ClassPriors* priors,
                                          const EvaluationSet& eval) {
    ResolvedBaseline result;
    result.kind = spec.kind;
    switch (spec.kind) {
    case BaselineKind::Random:
        result.p = acc_rand(eval.alphabet.size());
        break;
    case BaselineKind::Nir: {
        if (priors == nullptr)
            throw DomainError("NIR baseline requires training labels to "
                              "estimate class priors");
        const MajorityClass majority = most_frequent_class(*priors);
        result.p = nir(eval, majority.id);
        result.majority = majority;
        result.training_majority_prior = priors->priors[majority.id.index];
        break;
    }
    case BaselineKind::Explicit:
        if (!spec.explicit_p.has_value())
            throw DomainError("explicit baseline requires a probability value");
        if (!(*spec.explicit_p >= 0.0 && *spec.explicit_p <= 1.0))
            throw DomainError("explicit baseline probability must lie in [0, 1]");
        result.p = *spec.explicit_p;
        break;
    }
    return result;
}

double resolve_baseline(const BaselineSpec& spec, const ClassPriors* priors,
                        const EvaluationSet& eval) {
    return resolve_baseline_details(spec, priors, eval).p;
}

bool decide(const PValue& pval, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
    return pval.value <= alpha;
}

TestOutcome run_significance_test(const EvaluationSet& eval, const TestSpec& spec,
                                  const ClassPriors* priors) {
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0))
        throw DomainError("alpha must lie in (0, 1), got " +
                          std::to_string(spec.alpha));

    TestOutcome outcome;
    outcome.m = eval.size();
    outcome.t = count_successes(eval);
    outcome.accuracy = accuracy(eval);
    outcome.alpha = spec.alpha;
    outcome.sidedness = spec.sidedness;
    outcome.requested_method = spec.method;

    const ResolvedBaseline baseline = resolve_baseline_details(spec.baseline, priors, eval);
    outcome.baseline_kind = baseline.kind;
    outcome.p = baseline.p;
    outcome.q = 1.0 - baseline.p;
    if (baseline.majority.has_value())
        outcome.majority_class = baseline.majority->id;
    outcome.training_majority_prior = baseline.training_majority_prior;

    if (baseline.majority.has_value() && baseline.majority->tied)
        outcome.warnings.push_back(
            {WarningCode::MajorityTie,
             "two or more classes share the maximal training count; the "
             "first-appearing one was chosen"});
    if (outcome.p == 0.0 || outcome.p == 1.0)
        outcome.warnings.push_back(
            {WarningCode::DegenerateBaseline,
             "baseline p = " + format_probability(outcome.p) +
                 " makes the test statistically vacuous"});
    else if (baseline.training_majority_prior.has_value() &&
             *baseline.training_majority_prior == 1.0)
        outcome.warnings.push_back(
            {WarningCode::DegenerateBaseline,
             "training labels contain a single class, so the priors carry "
             "no information"});
    if (outcome.accuracy < outcome.p)
        outcome.warnings.push_back(
            {WarningCode::AccuracyBelowBaseline,
             "accuracy " + format_probability(outcome.accuracy) +
                 " is below the baseline " + format_probability(outcome.p) +
                 "; the upper-tail test assumes accuracy >= baseline"});

    const TailQuery query{outcome.t, outcome.m, outcome.p};

    const bool want_z = spec.method != TestMethod::Exact;
    const bool z_defined = outcome.p > 0.0 && outcome.p < 1.0;
    if (spec.method == TestMethod::NormalApproximation || (want_z && z_defined)) {
        // normal_z throws for degenerate p, which is the documented
        // behaviour when the approximation was explicitly requested
        outcome.z = normal_z(query, spec.continuity_correction);
        if (!outcome.z->gate_satisfied)
            outcome.warnings.push_back(
                {WarningCode::MpqGateFailed,
                 "m*p*q = " + format_probability(outcome.z->mpq) +
                     " is below 5; the normal approximation is unreliable"});
    }

    PValue one_tailed;
    if (spec.method == TestMethod::NormalApproximation)
        one_tailed = normal_upper_pval(*outcome.z);
    else
        one_tailed = upper_tail_exact(query);

    outcome.pval = spec.sidedness == Sidedness::TwoTailed
                       ? double_to_two_tailed(one_tailed, spec.clamp_two_tailed)
                       : one_tailed;
    if (outcome.pval.clamped)
        outcome.warnings.push_back(
            {WarningCode::TwoTailedClamped,
             "two-tailed doubling exceeded 1 and was clamped"});

    outcome.significant = decide(outcome.pval, spec.alpha);
    return outcome;
}

const char* to_string(BaselineKind kind) {
    switch (kind) {
    case BaselineKind::Random:
        return "random";
    case BaselineKind::Nir:
        return "nir";
    case BaselineKind::Explicit:
        return "explicit";
    }
    return "?";
}

const char* to_string(TestMethod method) {
    switch (method) {
    case TestMethod::Exact:
        return "exact";
    case TestMethod::NormalApproximation:
        return "normal";
    case TestMethod::Auto:
        return "auto";
    }
    return "?";
}

const char* to_string(Sidedness sidedness) {
    return sidedness == Sidedness::OneTailed ? "one-tailed" : "two-tailed";
}

const char* to_string(TailMethod method) {
    switch (method) {
    case TailMethod::ExactSum:
        return "exact-sum";
    case TailMethod::LogSpaceExact:
        return "log-space-exact";
    case TailMethod::NormalApproximation:
        return "normal-approximation";
    }
    return "?";
}

const char* to_string(WarningCode code) {
    switch (code) {
    case WarningCode::DegenerateBaseline:
        return "degenerate-baseline";
    case WarningCode::AccuracyBelowBaseline:
        return "accuracy-below-baseline";
    case WarningCode::MpqGateFailed:
        return "mpq-gate-failed";
    case WarningCode::MajorityTie:
        return "majority-tie";
    case WarningCode::TwoTailedClamped:
        return "two-tailed-clamped";
    }
    return "?";
}

} // namespace nirsig
