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

#ifndef NIRSIG_IO_HPP
#define NIRSIG_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "nirsig/evaluation.hpp"
#include "nirsig/significance.hpp"

namespace nirsig {

enum class FileFormat {
    Csv,       // header row required
    JsonLines, // one object per line
};

/// .jsonl/.ndjson/.json mean JSON lines; everything else is CSV.
FileFormat infer_format(const std::filesystem::path& path);

/// A predictions file: one row per testing object with its true and
/// predicted label.
struct PredictionsFile {
    std::filesystem::path path;
    FileFormat format = FileFormat::Csv;
    std::string true_column = "true"; // CSV column / JSON field "true"
    std::string pred_column = "pred"; // CSV column / JSON field "pred"
};

/// A training-labels file: one label per row (CSV column or JSON field
/// "label"), used only to estimate priors for the NIR baseline.
struct TrainingLabelsFile {
    std::filesystem::path path;
    FileFormat format = FileFormat::Csv;
    std::string label_column = "label";
};

/// Reads the predictions file into an EvaluationSet, interning labels into
/// a fresh alphabet in first-appearance order (true label before predicted,
/// row by row). Throws ParseError with a 1-based line number on bad input.
EvaluationSet parse_predictions(const PredictionsFile& file);

/// Reads training labels in file order, extending `alphabet` with classes
/// unseen in the predictions.
std::vector<ClassId> parse_training_labels(const TrainingLabelsFile& file,
                                           LabelAlphabet& alphabet);

enum class ReportMode {
    Human,
    Machine, // single JSON document, numbers round-trip bit-exactly
};

/// Input metadata echoed into reports.
struct ReportMeta {
    std::string predictions_path;
    std::string training_labels_path; // empty when not used
    std::vector<std::string> class_names;
};

std::string render_report(const TestOutcome& outcome, ReportMode mode,
                          const ReportMeta& meta = {});

} // namespace nirsig

#endif // NIRSIG_IO_HPP
