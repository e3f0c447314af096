#pragma once

#include <stdexcept>
#include <string>

namespace coxlen {

// Input that cannot be parsed or violates a documented precondition.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The braid-orbit search touched more states than SearchLimits::max_orbit.
struct OrbitLimitExceeded : std::runtime_error {
  explicit OrbitLimitExceeded(std::size_t limit)
      : std::runtime_error("orbit exploration exceeded limit of " +
                           std::to_string(limit) + " states") {}
};

// The deletion-subset scan would test more candidates than
// SearchLimits::max_subsets.
struct SubsetBudgetExceeded : std::runtime_error {
  explicit SubsetBudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// An operation that requires the identity element was handed something else.
struct NotIdentityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A claimed deletion set does not cancel the word to the identity.
struct NotADeletionSetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The floating-point matrix comparison landed between the accept and reject
// thresholds; the caller should fall back to an exact method.
struct PrecisionInconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coxlen
