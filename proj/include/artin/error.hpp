#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorKind {
  parse,         // malformed input text
  invalid,       // input violates a structural invariant
  precondition,  // operation called outside its domain
  resource,      // configured cap exceeded
  exhausted,     // bounded search found nothing
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid: return "invalid";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::resource: return "resource";
    case ErrorKind::exhausted: return "exhausted";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace artin
