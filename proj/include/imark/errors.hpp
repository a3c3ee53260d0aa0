#pragma once

#include <stdexcept>
#include <string>

namespace imark {

enum class ErrorCode {
  EmptySpec,
  BadElement,
  Duplicate,
  LimitExceeded,
  BadBase,
  OutsideDomain,
  PrefixTooShort,
  InconsistentTail,
  Unsupported,
  BadCacheFile,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace imark
