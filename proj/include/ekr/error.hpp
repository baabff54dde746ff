#pragma once

#include <stdexcept>

namespace ekr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid user input: (q, ell) that does not satisfy the theorem's hypotheses,
/// unsupported characteristic, table size cap exceeded.
struct ConfigError : Error {
  using Error::Error;
};

/// A verification step disagreed with its oracle.
struct CheckFailure : Error {
  using Error::Error;
};

}  // namespace ekr
