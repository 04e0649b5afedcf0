#pragma once

#include <stdexcept>
#include <string>

namespace rspin {

// Error taxonomy shared across the library.  Every failure mode that a
// caller can trigger with bad input gets its own type so the CLI can map
// them to exit codes and tests can assert on the exact kind.

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct modulus_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parity_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct rank_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct connectivity_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct curve_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct configuration_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct partition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct orientability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct obstruction_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failures (gluing bugs, holonomy violations).  These
// indicate a defect in the library itself, never bad user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace rspin
