#ifndef PAIROPS_ERRORS_HPP
#define PAIROPS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pairops {

// Thrown when an exhaustive enumeration would exceed its configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a truncated computation cannot be trusted as an answer about
// the untruncated ring (order overflow, classification failure, or a
// disagreement between precisions).
struct Unstable : std::runtime_error {
  explicit Unstable(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  size_t line;
  size_t col;
  ParseError(const std::string& what, size_t line_, size_t col_)
      : std::runtime_error(what + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

}  // namespace pairops

#endif
