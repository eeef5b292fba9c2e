#pragma once

#include <stdexcept>
#include <string>

namespace schemeforge {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files, invalid colorings, axiom violations on ingestion.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Group enumeration or degree exceeded a configured cap.
class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct Caps {
  std::size_t group_cap = 20000;
  std::size_t degree_cap = 256;
};

}  // namespace schemeforge
