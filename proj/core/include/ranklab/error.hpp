#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

// Every failure carries a module-qualified code such as "grp.CapExceeded".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Raised when a theorem under test fails on an instance. Never swallowed.
class TheoremFalsified : public Error {
 public:
  explicit TheoremFalsified(const std::string& what)
      : Error("rank.TheoremFalsified", what) {}
  TheoremFalsified(std::string code, const std::string& what)
      : Error(std::move(code), what) {}
};

}  // namespace ranklab
