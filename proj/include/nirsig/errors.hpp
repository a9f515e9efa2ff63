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

#ifndef NIRSIG_ERRORS_HPP
#define NIRSIG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nirsig {

/// Base class for all nirsig errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition or invariant.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An input exceeds a documented size bound (e.g. the oracle's trial limit).
class ScaleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A malformed input file. Carries the file name and 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    explicit ParseError(std::string file, const std::string& what)
        : Error(file + ": " + what), file_(std::move(file)), line_(0) {}

    const std::string& file() const noexcept { return file_; }

    /// 1-based line number; 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

} // namespace nirsig

#endif // NIRSIG_ERRORS_HPP
