#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semicat {

/// Every semantic failure in the library throws this type. `code()` is a
/// stable machine-readable tag ("NotAssociative", "ShapeMismatch", ...);
/// `what()` is the tag plus a human-readable message naming the offending
/// objects/morphisms.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace semicat
