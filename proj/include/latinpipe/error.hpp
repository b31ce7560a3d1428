#pragma once

#include <stdexcept>
#include <string>

namespace latinpipe {

// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
  parse = 1,     // malformed input file
  invalid = 2,   // bad argument or config
  io = 3,        // file could not be read/written
  validation = 4 // data violates a documented invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorCode::parse, msg); }
inline Error invalid_error(const std::string& msg) { return Error(ErrorCode::invalid, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorCode::io, msg); }
inline Error validation_error(const std::string& msg) { return Error(ErrorCode::validation, msg); }

}  // namespace latinpipe
