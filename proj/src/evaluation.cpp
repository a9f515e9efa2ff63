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

#include "nirsig/evaluation.hpp"

#include <algorithm>
#include <limits>

#include "nirsig/errors.hpp"

namespace nirsig {

ClassId LabelAlphabet::intern(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end())
        return ClassId{it->second};
    if (names_.size() >= std::numeric_limits<std::uint32_t>::max())
        throw DomainError("label alphabet overflow");
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(label);
    index_.emplace(names_.back(), id);
    return ClassId{id};
}

std::optional<ClassId> LabelAlphabet::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return ClassId{it->second};
}

const std::string& LabelAlphabet::name(ClassId id) const {
    if (id.index >= names_.size())
        throw DomainError("class id " + std::to_string(id.index) +
                          " is not in the alphabet (C = " +
                          std::to_string(names_.size()) + ")");
    return names_[id.index];
}

std::int64_t count_successes(const EvaluationSet& eval) {
    if (eval.records.empty())
        throw DomainError("evaluation set is empty");
    std::int64_t successes = 0;
    for (const auto& record : eval.records)
        if (record.true_label == record.predicted_label)
            ++successes;
    return successes;
}

double accuracy(const EvaluationSet& eval) {
    return static_cast<double>(count_successes(eval)) /
           static_cast<double>(eval.size());
}

double acc_rand(std::size_t class_count) {
    if (class_count < 2)
        throw DomainError("random baseline needs at least 2 classes, got " +
                          std::to_string(class_count));
    return 1.0 / static_cast<double>(class_count);
}

ClassPriors estimate_priors(std::span<const ClassId> training_labels,
                            const LabelAlphabet& alphabet) {
    if (training_labels.empty())
        throw DomainError("training label list is empty");
    ClassPriors result;
    result.counts.assign(alphabet.size(), 0);
    for (ClassId label : training_labels) {
        if (label.index >= alphabet.size())
            throw DomainError("training label id " + std::to_string(label.index) +
                              " is not in the alphabet");
        ++result.counts[label.index];
    }
    result.total = static_cast<std::int64_t>(training_labels.size());
    result.priors.resize(result.counts.size());
    for (std::size_t i = 0; i < result.counts.size(); ++i)
        result.priors[i] = static_cast<double>(result.counts[i]) /
                           static_cast<double>(result.total);
    return result;
}

MajorityClass most_frequent_class(const ClassPriors& priors) {
    if (priors.counts.empty())
        throw DomainError("priors carry no classes");
    std::size_t best = 0;
    bool tied = false;
    for (std::size_t i = 1; i < priors.counts.size(); ++i) {
        if (priors.counts[i] > priors.counts[best]) {
            best = i;
            tied = false;
        } else if (priors.counts[i] == priors.counts[best]) {
            tied = true;
        }
    }
    return MajorityClass{ClassId{static_cast<std::uint32_t>(best)}, tied};
}

double nir(const EvaluationSet& eval, ClassId majority) {
    if (eval.records.empty())
        throw DomainError("evaluation set is empty");
    if (majority.index >= eval.alphabet.size())
        throw DomainError("majority class id " + std::to_string(majority.index) +
                          " does not belong to the evaluation alphabet");
    std::int64_t hits = 0;
    for (const auto& record : eval.records)
        if (record.true_label == majority)
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(eval.size());
}

} // namespace nirsig
