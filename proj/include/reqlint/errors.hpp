// Copyright 2026 The Reqlint Authors.
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

#ifndef REQLINT_ERRORS_HPP
#define REQLINT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace reqlint {

// Base class for everything reqlint throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured regular expression does not compile.
class PatternError : public Error {
 public:
  using Error::Error;
};

// A file does not parse (malformed catalog, label file, config file).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A parsed catalog violates rule invariants. Carries one message per
// violation so callers can list them all.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& msg, std::vector<std::string> violations)
      : Error(msg), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A resource (dictionary, document list, ...) is missing or unreadable.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Checker parameters are unusable (empty term list, bad regex, ...).
class BadParams : public Error {
 public:
  using Error::Error;
};

// A catalog binds a checker id the registry does not know.
class UnknownChecker : public Error {
 public:
  using Error::Error;
};

// Reports from different catalogs cannot be merged.
class CatalogMismatch : public Error {
 public:
  using Error::Error;
};

// Rater label sequences differ in length (or are empty).
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace reqlint

#endif  // REQLINT_ERRORS_HPP
