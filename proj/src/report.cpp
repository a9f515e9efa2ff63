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

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "nirsig/io.hpp"

namespace nirsig {

namespace {

using nlohmann::json;

// Human mode shows 6 significant digits; machine mode relies on the JSON
// writer's shortest round-trip rendering, so every double reparses
// bit-exactly.
std::string human_number(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

std::string render_machine(const TestOutcome& outcome, const ReportMeta& meta) {
    json doc;
    doc["m"] = outcome.m;
    doc["t"] = outcome.t;
    doc["accuracy"] = outcome.accuracy;
    doc["baseline_kind"] = to_string(outcome.baseline_kind);
    doc["p"] = outcome.p;
    doc["q"] = outcome.q;
    doc["sidedness"] = to_string(outcome.sidedness);
    doc["method"] = to_string(outcome.pval.method);
    doc["requested_method"] = to_string(outcome.requested_method);
    doc["pval"] = outcome.pval.value;
    doc["pval_clamped"] = outcome.pval.clamped;
    doc["pval_out_of_range"] = outcome.pval.out_of_range;
    if (outcome.z.has_value()) {
        doc["z"] = outcome.z->z;
        doc["mpq"] = outcome.z->mpq;
        doc["gate_satisfied"] = outcome.z->gate_satisfied;
        doc["continuity_corrected"] = outcome.z->continuity_corrected;
    } else {
        doc["z"] = nullptr;
        doc["mpq"] = nullptr;
        doc["gate_satisfied"] = nullptr;
    }
    doc["alpha"] = outcome.alpha;
    doc["significant"] = outcome.significant;
    doc["warnings"] = json::array();
    for (const auto& warning : outcome.warnings)
        doc["warnings"].push_back(
            {{"code", to_string(warning.code)}, {"message", warning.message}});

    json inputs;
    if (!meta.predictions_path.empty())
        inputs["predictions"] = meta.predictions_path;
    if (!meta.training_labels_path.empty())
        inputs["train_labels"] = meta.training_labels_path;
    if (!inputs.is_null())
        doc["inputs"] = inputs;
    if (!meta.class_names.empty()) {
        doc["C"] = meta.class_names.size();
        doc["classes"] = meta.class_names;
        if (outcome.majority_class.has_value())
            doc["majority_class"] =
                meta.class_names[outcome.majority_class->index];
    }
    if (outcome.training_majority_prior.has_value())
        doc["training_majority_prior"] = *outcome.training_majority_prior;
    return doc.dump(2) + "\n";
}

std::string render_human(const TestOutcome& outcome, const ReportMeta& meta) {
    std::ostringstream out;
    auto row = [&out](const std::string& key, const std::string& value) {
        out << "  " << std::left << std::setw(22) << (key + ":") << value << "\n";
    };

    out << "binomial significance test against a no-information baseline\n";
    if (!meta.predictions_path.empty())
        row("predictions", meta.predictions_path);
    if (!meta.training_labels_path.empty())
        row("training labels", meta.training_labels_path);
    if (!meta.class_names.empty()) {
        std::string classes = std::to_string(meta.class_names.size()) + " [";
        for (std::size_t i = 0; i < meta.class_names.size(); ++i) {
            if (i > 0)
                classes += ", ";
            if (i == 8 && meta.class_names.size() > 9) {
                classes += "...";
                break;
            }
            classes += meta.class_names[i];
        }
        classes += "]";
        row("classes (C)", classes);
    }
    row("m (test records)", std::to_string(outcome.m));
    row("t (successes)", std::to_string(outcome.t));
    row("accuracy", human_number(outcome.accuracy));

    std::string baseline = std::string(to_string(outcome.baseline_kind)) +
                           " p = " + human_number(outcome.p) +
                           " (q = " + human_number(outcome.q) + ")";
    row("baseline", baseline);
    if (outcome.majority_class.has_value() && !meta.class_names.empty())
        row("majority class",
            meta.class_names[outcome.majority_class->index] +
                " (training prior " +
                human_number(outcome.training_majority_prior.value_or(0.0)) + ")");

    row("test", std::string(to_string(outcome.sidedness)) + " binomial, " +
                    to_string(outcome.pval.method));
    std::string pval_text = human_number(outcome.pval.value);
    if (outcome.pval.clamped)
        pval_text += " (clamped)";
    if (outcome.pval.out_of_range)
        pval_text += " (raw doubling, exceeds 1)";
    row("p-value", pval_text);
    if (outcome.z.has_value())
        row("z-statistic",
            human_number(outcome.z->z) + " (mpq = " + human_number(outcome.z->mpq) +
                (outcome.z->gate_satisfied ? ", normal approximation applicable)"
                                           : ", below the mpq >= 5 gate)"));
    row("alpha", human_number(outcome.alpha));
    row("verdict", std::string(outcome.significant ? "SIGNIFICANT" : "NOT SIGNIFICANT") +
                       " at alpha=" + human_number(outcome.alpha));
    if (outcome.warnings.empty()) {
        row("warnings", "none");
    } else {
        out << "  warnings:\n";
        for (const auto& warning : outcome.warnings)
            out << "    - [" << to_string(warning.code) << "] " << warning.message
                << "\n";
    }
    return out.str();
}

} // namespace

std::string render_report(const TestOutcome& outcome, ReportMode mode,
                          const ReportMeta& meta) {
    return mode == ReportMode::Machine ? render_machine(outcome, meta)
                                       : render_human(outcome, meta);
}

} // namespace nirsig
