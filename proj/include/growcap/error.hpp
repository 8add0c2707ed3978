#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace growcap {

enum class ErrorCode {
  kZeroDenominator = 1,
  kNotRealSurd,
  kIncomparable,
  kRationalInput,
  kNotIrreducible,
  kCuspAtInfinity,
  kParse,
  kDomain,
  kIterationLimit,
};

// All library failures are reported as growcap::Error; the C API maps code() to
// a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParse,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace growcap
