#pragma once

#include <stdexcept>
#include <string>

namespace antiramsey {

enum class ErrorKind {
  parse,
  limit,
  domain,
  budget,
  indeterminate,
  resource,
  io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::limit: return "limit error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::budget: return "budget exceeded";
    case ErrorKind::indeterminate: return "indeterminate";
    case ErrorKind::resource: return "resource error";
    case ErrorKind::io: return "i/o error";
  }
  return "error";
}

// Single exception type for every failure class; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace antiramsey
