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

#include "nirsig/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>

#include <json.hpp>

#include "nirsig/errors.hpp"

namespace nirsig {

namespace {

using nlohmann::json;

std::string lower_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext;
}

// Reads all lines; strips a UTF-8 BOM and trailing CR. Throws on a missing
// or unreadable file.
std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path.string(), "cannot open file");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    if (!lines.empty() && lines.front().starts_with("\xEF\xBB\xBF"))
        lines.front().erase(0, 3);
    return lines;
}

// One CSV record; double quotes escape commas and embedded quotes.
// Multi-line quoted fields are rejected.
std::vector<std::string> split_csv(const std::string& line,
                                   const std::string& file, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted)
        throw ParseError(file, lineno, "unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name, const std::string& file) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw ParseError(file, 1, "column \"" + name + "\" not found in header");
    return static_cast<std::size_t>(it - header.begin());
}

// JSON-lines field -> label text. Strings pass through; numbers and bools
// take their literal form.
std::string label_from_json(const json& object, const std::string& key,
                            const std::string& file, std::size_t lineno) {
    auto it = object.find(key);
    if (it == object.end())
        throw ParseError(file, lineno, "missing field \"" + key + "\"");
    if (it->is_string())
        return it->get<std::string>();
    if (it->is_number() || it->is_boolean())
        return it->dump();
    throw ParseError(file, lineno,
                     "field \"" + key + "\" must be a string or number");
}

json parse_json_line(const std::string& line, const std::string& file,
                     std::size_t lineno) {
    json object = json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object())
        throw ParseError(file, lineno, "not a JSON object");
    return object;
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

} // namespace

FileFormat infer_format(const std::filesystem::path& path) {
    const std::string ext = lower_extension(path);
    if (ext == ".jsonl" || ext == ".ndjson" || ext == ".json")
        return FileFormat::JsonLines;
    return FileFormat::Csv;
}

EvaluationSet parse_predictions(const PredictionsFile& file) {
    const std::string name = file.path.string();
    const std::vector<std::string> lines = read_lines(file.path);
    EvaluationSet eval;

    if (file.format == FileFormat::Csv) {
        if (lines.empty() || blank(lines[0]))
            throw ParseError(name, "empty file: header row required");
        const auto header = split_csv(lines[0], name, 1);
        const std::size_t true_col = find_column(header, file.true_column, name);
        const std::size_t pred_col = find_column(header, file.pred_column, name);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (blank(lines[i]))
                continue;
            const auto fields = split_csv(lines[i], name, i + 1);
            if (fields.size() != header.size())
                throw ParseError(name, i + 1,
                                 "expected " + std::to_string(header.size()) +
                                     " fields, got " + std::to_string(fields.size()));
            const ClassId truth = eval.alphabet.intern(fields[true_col]);
            const ClassId predicted = eval.alphabet.intern(fields[pred_col]);
            eval.records.push_back({truth, predicted});
        }
    } else {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (blank(lines[i]))
                continue;
            const json object = parse_json_line(lines[i], name, i + 1);
            const ClassId truth = eval.alphabet.intern(
                label_from_json(object, file.true_column, name, i + 1));
            const ClassId predicted = eval.alphabet.intern(
                label_from_json(object, file.pred_column, name, i + 1));
            eval.records.push_back({truth, predicted});
        }
    }

    if (eval.records.empty())
        throw ParseError(name, "no prediction records found");
    return eval;
}

std::vector<ClassId> parse_training_labels(const TrainingLabelsFile& file,
                                           LabelAlphabet& alphabet) {
    const std::string name = file.path.string();
    const std::vector<std::string> lines = read_lines(file.path);
    std::vector<ClassId> labels;

    if (file.format == FileFormat::Csv) {
        if (lines.empty() || blank(lines[0]))
            throw ParseError(name, "empty file: header row required");
        const auto header = split_csv(lines[0], name, 1);
        std::size_t col;
        if (auto it = std::find(header.begin(), header.end(), file.label_column);
            it != header.end()) {
            col = static_cast<std::size_t>(it - header.begin());
        } else if (header.size() == 1) {
            col = 0; // a single unnamed column is unambiguous
        } else {
            throw ParseError(name, 1,
                             "column \"" + file.label_column +
                                 "\" not found in header");
        }
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (blank(lines[i]))
                continue;
            const auto fields = split_csv(lines[i], name, i + 1);
            if (fields.size() != header.size())
                throw ParseError(name, i + 1,
                                 "expected " + std::to_string(header.size()) +
                                     " fields, got " + std::to_string(fields.size()));
            labels.push_back(alphabet.intern(fields[col]));
        }
    } else {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (blank(lines[i]))
                continue;
            const json object = parse_json_line(lines[i], name, i + 1);
            labels.push_back(alphabet.intern(
                label_from_json(object, file.label_column, name, i + 1)));
        }
    }

    if (labels.empty())
        throw ParseError(name, "no training labels found");
    return labels;
}

} // namespace nirsig
