#pragma once

#include <stdexcept>
#include <string>

namespace gradealg {

// Error taxonomy shared by all modules. The CLI maps kinds to exit codes:
// Config -> 2, Resource -> 3, everything else -> 1.
enum class ErrorKind {
  Config,          // malformed input / invalid construction parameters
  Structure,       // shape or window mismatch between operands
  Validation,      // an axiom check failed on supplied data
  Domain,          // operation applied outside its mathematical domain
  Representation,  // a declared representation property does not hold
  Consistency,     // internal numerical consistency check failed
  Inversion,       // singular or numerically unusable linear system
  Resource,        // configured enumeration/size cap exceeded
  Io,              // file / serialization problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Config: return "config";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Representation: return "representation";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Inversion: return "inversion";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace gradealg
