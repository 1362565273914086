// Copyright 2026 The trihelix Authors
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

#ifndef TRIHELIX_ERRORS_HPP_
#define TRIHELIX_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace trihelix {

// Base class for every error thrown by this library. Catching trihelix::Error
// is enough to trap anything the library raises on bad input or bad state;
// std::bad_alloc and friends still propagate as themselves.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A probability vector is negative, non-finite, of the wrong length, or does
// not sum to one within tolerance.
class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

// An axis selection is empty, out of range, duplicated, or not ascending.
class InvalidAxes : public Error {
 public:
  using Error::Error;
};

// Overlapping counts violate inclusion-exclusion: some derived cell of the
// contingency table would be negative. `cell` names the offending cell.
class InconsistentCounts : public Error {
 public:
  InconsistentCounts(const std::string& what, std::string cell)
      : Error(what), cell(std::move(cell)) {}
  explicit InconsistentCounts(const std::string& what) : Error(what) {}

  std::string cell;
};

// A population (total, or the union when the none-cell is excluded) is zero,
// so no distribution can be formed.
class EmptyPopulation : public Error {
 public:
  using Error::Error;
};

// A text payload does not match the expected format. `line` is 1-based;
// `column` is the 1-based field index, or 0 when the whole line is at fault.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line, int column = 0)
      : Error(what), line(line), column(column) {}

  int line = 0;
  int column = 0;
};

// The same year appears more than once in a record collection.
class DuplicateYear : public Error {
 public:
  DuplicateYear(const std::string& what, int year) : Error(what), year(year) {}

  int year = 0;
};

// No built-in dataset has the requested name.
class UnknownDataset : public Error {
 public:
  using Error::Error;
};

// One or more corpus documents carry no year. `identifiers` lists them all.
class MissingYear : public Error {
 public:
  MissingYear(const std::string& what, std::vector<std::string> identifiers)
      : Error(what), identifiers(std::move(identifiers)) {}

  std::vector<std::string> identifiers;
};

// A moving-average window exceeds the series length.
class WindowTooLarge : public Error {
 public:
  using Error::Error;
};

// A window or trend parameter is outside its valid range.
class InvalidWindow : public Error {
 public:
  using Error::Error;
};

// A synthetic-regime request cannot be satisfied: probabilities out of range,
// or a coupling too strong for the requested marginals.
class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trihelix

#endif  // TRIHELIX_ERRORS_HPP_
