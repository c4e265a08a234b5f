// Copyright 2026 The GFL Authors
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

#ifndef GFL_ERRORS_H_
#define GFL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfl {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex id (or index) that is not part of the ambient graph.
class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& id)
      : Error("unknown vertex '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Input graph data violating the FiniteGraph invariants. `position` locates
// the offending element, e.g. "edges[3]".
class MalformedGraphError : public Error {
 public:
  MalformedGraphError(const std::string& position, const std::string& what)
      : Error(position.empty() ? what : position + ": " + what),
        position_(position),
        reason_(what) {}
  const std::string& position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string position_;
  std::string reason_;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The graph contains a cycle but the operation needs a member of K_omega.
class NotAForestError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An instance exceeds a configured size guard. Never a wrong answer, only a
// refusal to run.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& guard, std::size_t requested,
                std::size_t limit)
      : Error("capacity exceeded for '" + guard + "': requested " +
              std::to_string(requested) + ", limit " + std::to_string(limit)),
        guard_(guard),
        requested_(requested),
        limit_(limit) {}
  const std::string& guard() const { return guard_; }
  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string guard_;
  std::size_t requested_;
  std::size_t limit_;
};

// Formula text that does not match the grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Two independent routes that must agree did not. Signals a library bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gfl

#endif  // GFL_ERRORS_H_
