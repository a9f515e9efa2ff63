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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "nirsig/errors.hpp"
#include "nirsig/evaluation.hpp"

using namespace nirsig;

namespace {

// Builds an EvaluationSet from (true, predicted) label text pairs.
EvaluationSet make_eval(const std::vector<std::pair<std::string, std::string>>& rows) {
    EvaluationSet eval;
    for (const auto& [truth, predicted] : rows) {
        const ClassId t = eval.alphabet.intern(truth);
        const ClassId p = eval.alphabet.intern(predicted);
        eval.records.push_back({t, p});
    }
    return eval;
}

std::vector<ClassId> intern_all(LabelAlphabet& alphabet,
                                const std::vector<std::string>& labels) {
    std::vector<ClassId> ids;
    ids.reserve(labels.size());
    for (const auto& label : labels)
        ids.push_back(alphabet.intern(label));
    return ids;
}

} // namespace

TEST_CASE("label alphabet interning is a first-appearance bijection") {
    LabelAlphabet alphabet;
    const ClassId a = alphabet.intern("a");
    const ClassId b = alphabet.intern("b");
    CHECK(a.index == 0);
    CHECK(b.index == 1);
    CHECK(alphabet.intern("a") == a); // idempotent
    CHECK(alphabet.size() == 2);
    CHECK(alphabet.name(a) == "a");
    CHECK(alphabet.name(b) == "b");
    CHECK(alphabet.find("b") == b);
    CHECK_FALSE(alphabet.find("c").has_value());
    CHECK_THROWS_AS(alphabet.name(ClassId{7}), DomainError);
}

TEST_CASE("count_successes and accuracy") {
    const EvaluationSet eval =
        make_eval({{"a", "a"}, {"a", "b"}, {"b", "b"}, {"b", "b"}});
    CHECK(count_successes(eval) == 3);
    CHECK(accuracy(eval) == 0.75);

    const EvaluationSet perfect = make_eval({{"a", "a"}, {"b", "b"}, {"c", "c"}});
    CHECK(count_successes(perfect) == perfect.size());
    CHECK(accuracy(perfect) == 1.0);

    const EvaluationSet wrong = make_eval({{"a", "b"}, {"b", "a"}});
    CHECK(count_successes(wrong) == 0);
    CHECK(accuracy(wrong) == 0.0);

    const EvaluationSet empty;
    CHECK_THROWS_AS(count_successes(empty), DomainError);
    CHECK_THROWS_AS(accuracy(empty), DomainError);
}

TEST_CASE("acc_rand") {
    CHECK(acc_rand(2) == 0.5);
    CHECK(acc_rand(4) == 0.25);
    CHECK(acc_rand(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(acc_rand(1), DomainError);
    CHECK_THROWS_AS(acc_rand(0), DomainError);

    for (std::size_t c = 2; c <= 1000; ++c)
        CHECK(std::fabs(acc_rand(c) * static_cast<double>(c) - 1.0) <= 1e-15);
}

TEST_CASE("estimate_priors") {
    LabelAlphabet alphabet;
    std::vector<std::string> labels(60, "a");
    labels.insert(labels.end(), 40, "b");
    const auto ids = intern_all(alphabet, labels);
    const ClassPriors priors = estimate_priors(ids, alphabet);
    CHECK(priors.total == 100);
    CHECK(priors.counts == std::vector<std::int64_t>{60, 40});
    CHECK(priors.priors[0] == 0.6);
    CHECK(priors.priors[1] == 0.4);

    SUBCASE("classes absent from training get prior zero") {
        LabelAlphabet two;
        two.intern("a");
        two.intern("b");
        const std::vector<ClassId> only_a(10, ClassId{0});
        const ClassPriors degenerate = estimate_priors(only_a, two);
        CHECK(degenerate.priors[0] == 1.0);
        CHECK(degenerate.priors[1] == 0.0);
    }
    SUBCASE("uniform counts") {
        LabelAlphabet three;
        const auto ids3 = intern_all(
            three, {"a", "b", "c", "a", "b", "c", "a", "b", "c", "a", "b", "c",
                    "a", "b", "c"});
        const ClassPriors uniform = estimate_priors(ids3, three);
        for (double prior : uniform.priors)
            CHECK(prior == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(estimate_priors({}, alphabet), DomainError);
        const std::vector<ClassId> stray = {ClassId{9}};
        CHECK_THROWS_AS(estimate_priors(stray, alphabet), DomainError);
    }
}

TEST_CASE("priors sum to one") {
    std::mt19937 rng(101);
    for (int rep = 0; rep < 200; ++rep) {
        LabelAlphabet alphabet;
        const int classes = std::uniform_int_distribution<int>(1, 30)(rng);
        const int n = std::uniform_int_distribution<int>(1, 500)(rng);
        std::vector<ClassId> labels;
        for (int i = 0; i < n; ++i)
            labels.push_back(alphabet.intern(
                "c" + std::to_string(
                          std::uniform_int_distribution<int>(0, classes - 1)(rng))));
        const ClassPriors priors = estimate_priors(labels, alphabet);
        double sum = 0.0;
        for (double prior : priors.priors) {
            CHECK(prior >= 0.0);
            CHECK(prior <= 1.0);
            sum += prior;
        }
        CHECK(std::fabs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("most_frequent_class") {
    SUBCASE("unique maximum") {
        ClassPriors priors{{60, 40, 0}, 100, {0.6, 0.4, 0.0}};
        const MajorityClass majority = most_frequent_class(priors);
        CHECK(majority.id == ClassId{0});
        CHECK_FALSE(majority.tied);
    }
    SUBCASE("tie breaks to the smaller id and is flagged") {
        ClassPriors priors{{50, 50, 0}, 100, {0.5, 0.5, 0.0}};
        const MajorityClass majority = most_frequent_class(priors);
        CHECK(majority.id == ClassId{0});
        CHECK(majority.tied);
    }
    SUBCASE("increasing counts") {
        ClassPriors priors{{1, 2, 3}, 6, {1.0 / 6, 2.0 / 6, 3.0 / 6}};
        const MajorityClass majority = most_frequent_class(priors);
        CHECK(majority.id == ClassId{2});
        CHECK_FALSE(majority.tied);
    }
    SUBCASE("tie among non-maximal counts is not a tie") {
        ClassPriors priors{{4, 4, 6}, 14, {4.0 / 14, 4.0 / 14, 6.0 / 14}};
        const MajorityClass majority = most_frequent_class(priors);
        CHECK(majority.id == ClassId{2});
        CHECK_FALSE(majority.tied);
    }
}

TEST_CASE("majority class is invariant under duplicating the training list") {
    std::mt19937 rng(211);
    for (int rep = 0; rep < 100; ++rep) {
        LabelAlphabet alphabet;
        const int classes = std::uniform_int_distribution<int>(2, 8)(rng);
        const int n = std::uniform_int_distribution<int>(1, 60)(rng);
        std::vector<ClassId> labels;
        for (int i = 0; i < n; ++i)
            labels.push_back(alphabet.intern(
                "c" + std::to_string(
                          std::uniform_int_distribution<int>(0, classes - 1)(rng))));
        std::vector<ClassId> doubled = labels;
        doubled.insert(doubled.end(), labels.begin(), labels.end());
        const MajorityClass once =
            most_frequent_class(estimate_priors(labels, alphabet));
        const MajorityClass twice =
            most_frequent_class(estimate_priors(doubled, alphabet));
        CHECK(once.id == twice.id);
        CHECK(once.tied == twice.tied);
    }
}

TEST_CASE("nir counts majority-class records on the testing set") {
    // 50 test records, 30 of true class a
    std::vector<std::pair<std::string, std::string>> rows;
    for (int i = 0; i < 30; ++i)
        rows.push_back({"a", i % 2 == 0 ? "a" : "b"});
    for (int i = 0; i < 20; ++i)
        rows.push_back({"b", "a"});
    EvaluationSet eval = make_eval(rows);
    CHECK(nir(eval, ClassId{0}) == 0.6);

    SUBCASE("majority class absent from the test truth") {
        EvaluationSet other = make_eval({{"a", "b"}, {"b", "a"}});
        const ClassId c = other.alphabet.intern("c");
        CHECK(nir(other, c) == 0.0);
    }
    SUBCASE("every test record of the majority class") {
        EvaluationSet all = make_eval({{"a", "a"}, {"a", "b"}});
        CHECK(nir(all, ClassId{0}) == 1.0);
    }
    SUBCASE("id outside the alphabet") {
        CHECK_THROWS_AS(nir(eval, ClassId{17}), DomainError);
    }
    SUBCASE("complement over the other classes") {
        double rest = 0.0;
        for (std::uint32_t c = 1; c < eval.alphabet.size(); ++c)
            rest += nir(eval, ClassId{c});
        CHECK(std::fabs(nir(eval, ClassId{0}) + rest - 1.0) <= 1e-12);
    }
}

TEST_CASE("evaluation statistics are order invariant") {
    std::mt19937 rng(307);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = std::uniform_int_distribution<int>(1, 200)(rng);
        std::vector<std::pair<std::string, std::string>> rows;
        for (int i = 0; i < n; ++i) {
            const int truth = std::uniform_int_distribution<int>(0, 3)(rng);
            const int predicted = std::uniform_int_distribution<int>(0, 3)(rng);
            rows.push_back(
                {"c" + std::to_string(truth), "c" + std::to_string(predicted)});
        }
        EvaluationSet eval = make_eval(rows);
        const std::int64_t t = count_successes(eval);
        const double acc = accuracy(eval);
        // integer relation before division
        CHECK(acc == static_cast<double>(t) / static_cast<double>(eval.size()));

        EvaluationSet shuffled = eval;
        std::shuffle(shuffled.records.begin(), shuffled.records.end(), rng);
        CHECK(count_successes(shuffled) == t);
        CHECK(accuracy(shuffled) == acc);
        for (std::uint32_t c = 0; c < eval.alphabet.size(); ++c)
            CHECK(nir(shuffled, ClassId{c}) == nir(eval, ClassId{c}));
    }
}
