// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polycalc {

/// A relative-interior qualification hypothesis does not hold.
struct QualificationError : std::invalid_argument {
  explicit QualificationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An input set is empty or a required value is infinite.
struct InfeasibleError : std::invalid_argument {
  explicit InfeasibleError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace polycalc
