#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weilcensus {

// Input or contract violation. The CLI maps this to exit code 2.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value failed validation; carries every violated invariant.
class ValidationError : public ContractError {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// An identity that must hold mathematically did not. The CLI maps this to
// exit code 3; it should never fire on valid input.
class TheoremCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace weilcensus
