// Copyright 2026 The NewsDeps Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newsdeps {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is not valid JSON, or has the wrong top-level shape.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// A required article field is absent, empty or unparseable.
class InvalidArticle : public Error {
 public:
  InvalidArticle(std::size_t index, std::string field, const std::string& why)
      : Error("article " + std::to_string(index) + ": field '" + field +
              "' " + why),
        index_(index),
        field_(std::move(field)) {}

  std::size_t index() const { return index_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t index_;
  std::string field_;
};

// HTML extraction could not resolve a required field.
class ParseFailure : public Error {
 public:
  explicit ParseFailure(std::string field)
      : Error("could not extract field '" + field + "'"),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class FetchFailure : public Error {
 public:
  using Error::Error;
};

class CorpusTooSmall : public Error {
 public:
  explicit CorpusTooSmall(std::size_t k)
      : Error("corpus has " + std::to_string(k) +
              " article(s); at least 2 are required") {}
};

class EmptyMatrix : public Error {
 public:
  EmptyMatrix() : Error("similarity matrix has no entries") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MismatchedIds : public Error {
 public:
  using Error::Error;
};

// A configuration value violates its documented range.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace newsdeps
