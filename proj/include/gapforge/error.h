// Copyright 2026 The gapforge Authors
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

#ifndef GAPFORGE_ERROR_H_
#define GAPFORGE_ERROR_H_

#include <stdexcept>
#include <string>

namespace gapforge {

// Exception hierarchy. The CLI maps each kind onto a fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files, malformed documents.
class IoError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A representation or enumeration would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An eigensolver failed even after the dense fallback.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gapforge

#endif  // GAPFORGE_ERROR_H_
