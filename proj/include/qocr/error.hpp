#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qocr {

// Precondition or invariant violation in caller-supplied values.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Register would exceed the simulator's qubit cap.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed file contents. Carries the byte offset where parsing stopped.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace qocr
