#pragma once

#include <stdexcept>
#include <string>

namespace knit {

/// Malformed input: bad files, bad parameters, out-of-range values.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition of a graph operation was broken by the caller
/// (deleting an absent edge, extracting from an empty graph, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace knit
