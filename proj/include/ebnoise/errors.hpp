#pragma once

#include <stdexcept>
#include <string>

namespace ebnoise {

/// A value violates a domain invariant (non-CPT map, invalid state, out-of-range parameter).
class InvariantError : public std::domain_error {
 public:
  explicit InvariantError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed external input (JSON documents, sweep specifications).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ebnoise
