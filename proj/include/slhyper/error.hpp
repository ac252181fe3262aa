#pragma once

#include <stdexcept>
#include <string>

namespace slhyper {

/// Error raised on invalid inputs (bad structures, ill-formed formulas,
/// syntax errors). The CLI maps it to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace slhyper
