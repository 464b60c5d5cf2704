#pragma once

#include <stdexcept>

namespace meander {

/// Internal invariant breach (e.g. the winding step cap fired). Kept distinct
/// from bad-input errors so callers can map it to a separate exit path.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// A numerically checked claim failed, e.g. a constancy window that the
/// stabilization check requires to be flat turned out not to be.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace meander
