#ifndef VTB_ERROR_HPP
#define VTB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vtb {

enum class ErrorCode {
  invalid_argument,  // bad inputs, violated preconditions
  config,            // configuration / preset / campaign file problems
  io,                // file read/write failures
  extraction,        // signal analysis could not produce a result
  identification,    // model fitting failed
  numeric,           // solver failure (stagnation, rank deficiency, ...)
  unstable           // simulation diverged where a flag is not representable
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace vtb

#endif
