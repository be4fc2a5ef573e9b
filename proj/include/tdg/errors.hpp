/*
 * Copyright 2026 The tdgir Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdg {

/// A single failed invariant. `location` is a JSON-path style pointer into
/// the instance document ("$.utilities[0][0]"), `message` a short tag.
struct Violation {
    std::string location;
    std::string message;

    bool operator==(const Violation&) const = default;
};

inline std::string to_string(const std::vector<Violation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.location + ": " + v.message;
    }
    return out;
}

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON syntax, bad rational literal, unknown kind).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Input parsed but violates a model invariant.
class ValidationError : public Error {
   public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(to_string(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

   private:
    std::vector<Violation> violations_;
};

/// Distance factor table evaluated beyond its last entry.
class OutOfRangeError : public Error {
   public:
    using Error::Error;
};

/// A specialised solver was called on an instance outside its structural class.
class StructureMismatchError : public Error {
   public:
    using Error::Error;
};

class NotAPathError : public Error {
   public:
    using Error::Error;
};

class GeneratorPreconditionError : public Error {
   public:
    using Error::Error;
};

class DegenerateParameterError : public Error {
   public:
    using Error::Error;
};

class CertificateInvalidError : public Error {
   public:
    using Error::Error;
};

class OracleBudgetError : public Error {
   public:
    using Error::Error;
};

}  // namespace tdg
