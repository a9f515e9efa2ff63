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

#ifndef NIRSIG_EVALUATION_HPP
#define NIRSIG_EVALUATION_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nirsig {

/// Dense class index into a LabelAlphabet.
struct ClassId {
    std::uint32_t index = 0;

    friend bool operator==(ClassId, ClassId) = default;
    friend auto operator<=>(ClassId, ClassId) = default;
};

/// Bijective mapping between label text and dense class ids, in
/// first-appearance order.
class LabelAlphabet {
public:
    /// Returns the id of `label`, adding it if unseen.
    ClassId intern(std::string_view label);

    std::optional<ClassId> find(std::string_view label) const;

    /// Display text of a class. Throws DomainError for an unknown id.
    const std::string& name(ClassId id) const;

    std::size_t size() const noexcept { return names_.size(); }

    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// One testing object: its true label and the classifier's answer.
struct PredictionRecord {
    ClassId true_label;
    ClassId predicted_label;
};

struct EvaluationSet {
    std::vector<PredictionRecord> records;
    LabelAlphabet alphabet;

    std::int64_t size() const noexcept {
        return static_cast<std::int64_t>(records.size());
    }
};

/// Per-class training counts and the priors N_i / N estimated from them.
struct ClassPriors {
    std::vector<std::int64_t> counts; // aligned with the alphabet
    std::int64_t total = 0;
    std::vector<double> priors;
};

/// Most frequent training class; `tied` is set when the maximum count is
/// shared and the smallest class id was chosen.
struct MajorityClass {
    ClassId id;
    bool tied = false;
};

/// Number of correctly classified records. Throws DomainError on an empty set.
std::int64_t count_successes(const EvaluationSet& eval);

/// Fraction of correctly classified records, t/m.
double accuracy(const EvaluationSet& eval);

/// Expected accuracy 1/C of a uniformly random classifier.
/// Throws DomainError for fewer than two classes.
double acc_rand(std::size_t class_count);

/// Priors from training labels. Classes absent from training get prior 0.
/// Throws DomainError on empty input or on a label outside the alphabet.
ClassPriors estimate_priors(std::span<const ClassId> training_labels,
                            const LabelAlphabet& alphabet);

/// Class with the maximal training count; ties break to the smallest id.
MajorityClass most_frequent_class(const ClassPriors& priors);

/// No Information Rate: the fraction of testing records whose TRUE label is
/// the training-majority class. Counted on the testing set even though the
/// majority class comes from training.
double nir(const EvaluationSet& eval, ClassId majority);

} // namespace nirsig

#endif // NIRSIG_EVALUATION_HPP
