// Copyright 2026 The ackfund Authors
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

#ifndef ACKFUND_ERRORS_HPP
#define ACKFUND_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ackfund {

// Fatal input problems (duplicate ids, malformed tables, bad arguments).
// Maps to process exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem / stream failures. Maps to process exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A metric was requested on an empty denominator. Never silently 0 or 1.
class MetricUndefinedError : public std::runtime_error {
 public:
  explicit MetricUndefinedError(const std::string& what) : std::runtime_error(what) {}
};

class NotFoundError : public std::runtime_error {
 public:
  explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal notes produced while loading or extracting. Aggregation is
// order-independent: consumers sort before reporting.
struct Diagnostic {
  std::string context;  // "line 12", record id, ...
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

class Diagnostics {
 public:
  void add(std::string context, std::string message) {
    items_.push_back({std::move(context), std::move(message)});
  }
  void merge(const Diagnostics& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }
  const std::vector<Diagnostic>& items() const { return items_; }
  std::size_t count() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<Diagnostic> items_;
};

}  // namespace ackfund

#endif  // ACKFUND_ERRORS_HPP
