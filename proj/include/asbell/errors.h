// Copyright 2026 The asbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASBELL_ERRORS_H
#define ASBELL_ERRORS_H

#include <stdexcept>
#include <string>

namespace asbell {

/// A numeric argument is outside its admissible domain (odd N, V > 1, ...).
class InvalidParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operand sizes disagree (assignment length vs matrix order, etc).
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A vector that should lie on the unit sphere does not.
class InvalidDirectionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A JSON document does not match its schema. `path` is a JSON pointer to
/// the offending element ("" for the document root).
class SchemaError : public InvalidParameterError {
   public:
    SchemaError(std::string path, const std::string &message)
        : InvalidParameterError((path.empty() ? std::string("/") : path) + ": " + message), path_(std::move(path)) {
    }
    const std::string &path() const {
        return path_;
    }

   private:
    std::string path_;
};

/// An exhaustive computation would exceed the supported size.
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace asbell

#endif
