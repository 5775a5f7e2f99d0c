/*
 * Copyright 2026 The xgab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XGAB_ERROR_HPP_
#define XGAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace xgab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on parameters or arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed serialized object: bad magic, bad version, truncation, or an
// embedded value that violates an invariant.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Key generation exhausted its retry budget.
class KeygenError : public Error {
 public:
  using Error::Error;
};

}  // namespace xgab

#endif  // XGAB_ERROR_HPP_
