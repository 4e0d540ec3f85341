#pragma once

#include <stdexcept>
#include <string>

namespace graykeep {

// File and format problems (missing file, bad magic, truncated data).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent embedded data (corrupt header, LM length
// mismatch, ECB contradiction, out-of-range restored samples).
class CodecError : public std::runtime_error {
 public:
  explicit CodecError(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested payload does not fit the image at the given settings.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace graykeep
