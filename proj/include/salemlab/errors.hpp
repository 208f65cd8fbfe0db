#pragma once

#include <stdexcept>

namespace salemlab {

/// A request that would exceed a configured size or depth cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace salemlab
