#pragma once
#include <stdexcept>

namespace hopnav {

// Thrown for malformed arguments, unparsable files, out-of-range parameters.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when loaded data fails a stated contract (e.g. a cover that does not
// dominate its metric); carries a human-readable witness in the message.
struct PropertyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant violation. Reaching this is a bug.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}
