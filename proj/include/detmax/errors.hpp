#pragma once

#include <stdexcept>

namespace detmax {

/// An invariant the pipeline guarantees was violated; maps to exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace detmax
