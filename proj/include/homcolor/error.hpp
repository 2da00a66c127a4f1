#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcolor {

/// Malformed input: bad documents, dimension mismatches, odd maps, unknown names.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Identity DSL syntax error; `position` is a byte offset into the source text.
class ParseError : public StructuralError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : StructuralError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A construction's hypothesis failed. `detail` is a JSON rendering of the failing
/// report, suitable for printing as-is.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string precondition, std::string detail)
      : std::runtime_error("precondition failed: " + precondition),
        precondition_(std::move(precondition)),
        detail_(std::move(detail)) {}

  const std::string& precondition() const noexcept { return precondition_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string precondition_;
  std::string detail_;
};

/// Operator search would enumerate more candidates than allowed.
class SearchOverflow : public std::runtime_error {
 public:
  SearchOverflow(std::string count, std::size_t limit)
      : std::runtime_error("search space of " + count + " candidates exceeds limit " +
                           std::to_string(limit)),
        count_(std::move(count)),
        limit_(limit) {}

  const std::string& count() const noexcept { return count_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string count_;
  std::size_t limit_;
};

}  // namespace homcolor
