/*
 * Copyright 2026 The hyperpf Authors
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

namespace hyperpf {

/// Base class of every error raised for bad input.  Internal invariant
/// violations use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or argument violates a documented precondition (odd k, k not
/// dividing n, wrong subset size, wrong degree, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnassignedVariable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the default size guard.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperpf
