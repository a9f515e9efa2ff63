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

// nirsig: is a classifier's accuracy significantly better than chance or
// the No Information Rate? Exit codes: 0 significant, 1 not significant,
// 2 usage or parse error, 3 domain error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nirsig/errors.hpp"
#include "nirsig/io.hpp"
#include "nirsig/significance.hpp"

namespace {

constexpr int kExitSignificant = 0;
constexpr int kExitNotSignificant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct TestOptions {
    std::string predictions_path;
    std::string train_labels_path;
    std::optional<double> explicit_p;
    std::string baseline; // "random" or "nir"
    double alpha = 0.05;
    bool two_tailed = false;
    std::string method = "auto";
    bool no_continuity_correction = false;
    bool no_clamp = false;
    std::string output = "human";
    std::string true_col = "true";
    std::string pred_col = "pred";
};

nirsig::BaselineSpec pick_baseline(const TestOptions& opt) {
    const int sources = (opt.explicit_p.has_value() ? 1 : 0) +
                        (opt.baseline == "random" ? 1 : 0) +
                        (!opt.train_labels_path.empty() || opt.baseline == "nir" ? 1 : 0);
    if (sources > 1)
        throw CLI::ValidationError(
            "baseline", "choose one of --train-labels, --p or --baseline random");
    if (opt.explicit_p.has_value())
        return nirsig::BaselineSpec::explicit_probability(*opt.explicit_p);
    if (opt.baseline == "random")
        return nirsig::BaselineSpec::random();
    if (opt.baseline == "nir" && opt.train_labels_path.empty())
        throw CLI::ValidationError("baseline",
                                   "--baseline nir requires --train-labels");
    if (!opt.train_labels_path.empty())
        return nirsig::BaselineSpec::nir();
    throw CLI::ValidationError(
        "baseline",
        "no baseline given: pass --train-labels FILE (NIR), --p FLOAT or "
        "--baseline random");
}

int run_test(const TestOptions& opt) {
    nirsig::PredictionsFile predictions;
    predictions.path = opt.predictions_path;
    predictions.format = nirsig::infer_format(predictions.path);
    predictions.true_column = opt.true_col;
    predictions.pred_column = opt.pred_col;

    nirsig::EvaluationSet eval = nirsig::parse_predictions(predictions);

    std::optional<nirsig::ClassPriors> priors;
    if (!opt.train_labels_path.empty()) {
        nirsig::TrainingLabelsFile train;
        train.path = opt.train_labels_path;
        train.format = nirsig::infer_format(train.path);
        const auto labels = nirsig::parse_training_labels(train, eval.alphabet);
        priors = nirsig::estimate_priors(labels, eval.alphabet);
    }

    nirsig::TestSpec spec;
    spec.baseline = pick_baseline(opt);
    spec.alpha = opt.alpha;
    spec.sidedness =
        opt.two_tailed ? nirsig::Sidedness::TwoTailed : nirsig::Sidedness::OneTailed;
    if (opt.method == "exact")
        spec.method = nirsig::TestMethod::Exact;
    else if (opt.method == "normal")
        spec.method = nirsig::TestMethod::NormalApproximation;
    else
        spec.method = nirsig::TestMethod::Auto;
    spec.clamp_two_tailed = !opt.no_clamp;
    spec.continuity_correction = !opt.no_continuity_correction;

    const nirsig::TestOutcome outcome = nirsig::run_significance_test(
        eval, spec, priors.has_value() ? &*priors : nullptr);

    nirsig::ReportMeta meta;
    meta.predictions_path = opt.predictions_path;
    meta.training_labels_path = opt.train_labels_path;
    meta.class_names = eval.alphabet.names();

    const auto mode = opt.output == "machine" ? nirsig::ReportMode::Machine
                                              : nirsig::ReportMode::Human;
    std::cout << nirsig::render_report(outcome, mode, meta);
    return outcome.significant ? kExitSignificant : kExitNotSignificant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact binomial significance test of classifier accuracy "
                 "against the No Information Rate or the random baseline"};
    app.require_subcommand(1);

    TestOptions opt;
    double explicit_p_value = 0.0;
    CLI::App* test = app.add_subcommand(
        "test", "run the significance test on a predictions file");
    test->add_option("--predictions", opt.predictions_path,
                     "CSV or JSON-lines file with true and predicted labels")
        ->required();
    test->add_option("--train-labels", opt.train_labels_path,
                     "training labels file; enables the NIR baseline");
    auto* p_opt = test->add_option("--p", explicit_p_value,
                                   "explicit baseline success probability")
                      ->check(CLI::Range(0.0, 1.0));
    test->add_option("--baseline", opt.baseline, "baseline kind: random or nir")
        ->check(CLI::IsMember({"random", "nir"}));
    test->add_option("--alpha", opt.alpha, "significance level (default 0.05)")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    test->add_flag("--two-tailed", opt.two_tailed,
                   "report the two-tailed p-value instead of one-tailed");
    test->add_option("--method", opt.method, "exact, normal or auto (default auto)")
        ->check(CLI::IsMember({"exact", "normal", "auto"}));
    test->add_flag("--no-continuity-correction", opt.no_continuity_correction,
                   "drop the 0.5 continuity correction from the z-statistic");
    test->add_flag("--no-clamp", opt.no_clamp,
                   "report the raw two-tailed doubling even when it exceeds 1");
    test->add_option("--output", opt.output, "human or machine (default human)")
        ->check(CLI::IsMember({"human", "machine"}));
    test->add_option("--true-col", opt.true_col,
                     "CSV column with true labels (default \"true\")");
    test->add_option("--pred-col", opt.pred_col,
                     "CSV column with predicted labels (default \"pred\")");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (p_opt->count() > 0)
        opt.explicit_p = explicit_p_value;

    try {
        return run_test(opt);
    } catch (const CLI::ParseError& e) {
        std::cerr << "nirsig: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nirsig::ParseError& e) {
        std::cerr << "nirsig: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nirsig::DomainError& e) {
        std::cerr << "nirsig: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "nirsig: " << e.what() << "\n";
        return kExitDomain;
    }
}
