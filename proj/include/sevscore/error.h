// Copyright 2026 The Sevscore Authors. All Rights Reserved.
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

#ifndef SEVSCORE_ERROR_H_
#define SEVSCORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace sevscore {

// Base of all toolkit errors. The CLI maps ValidationError to exit code 2 and
// IoError to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition or file schema.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A feature has too little material (voiced frames, cycles) to be defined.
// The evaluation harness records such utterances as missing.
class InsufficientDataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace sevscore

#endif  // SEVSCORE_ERROR_H_
