#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kottwitz {

/// Structural problems with a group datum; carries every violated invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
  }
  std::vector<std::string> violations_;
};

/// A well-formed request whose mathematical precondition fails.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kottwitz
