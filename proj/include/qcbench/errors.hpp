// Copyright 2026 The qcbench authors
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

#ifndef QCBENCH_ERRORS_HPP
#define QCBENCH_ERRORS_HPP

#include <stdexcept>

namespace qcbench {

// Incompatible operator dimensions.
class ShapeError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested object exceeds the configured dense-size limits.
class SizeError : public std::length_error {
  using std::length_error::length_error;
};

// Input fails a physical-consistency check (hermiticity, positivity,
// unitarity, trace conditions, ...).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid request that cannot be served with the given data,
// e.g. a time grid without composable pairs.
class RequestError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input file.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcbench

#endif  // QCBENCH_ERRORS_HPP
