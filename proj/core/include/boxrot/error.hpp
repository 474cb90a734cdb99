/**
 * Copyright 2026 The boxrot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOXROT_ERROR_HPP
#define BOXROT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace boxrot {

// Base class for every error raised by the library. Messages are single-line
// and human readable; the CLI prefixes them with "error: ".
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on an argument was violated (bad box, out-of-range parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (annotation files, PPM images).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace boxrot

#endif  // BOXROT_ERROR_HPP
