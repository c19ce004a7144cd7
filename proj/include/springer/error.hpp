#pragma once

#include <stdexcept>
#include <string>

namespace springer {

/// Malformed user input (partition text, z text, polynomial text).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of a library operation was not met, e.g. a partition that
/// is not valid for the series or a component element outside A(lambda).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace springer
