#ifndef HRC_ERROR_HPP
#define HRC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hrc {

enum class ErrorKind {
  InvalidArgument,   // malformed inputs (empty domain, bad partition, ...)
  DuplicateName,     // duplicate port or definition name
  UnknownName,       // reference to an undeclared port or definition
  DomainMismatch,    // shared port with different domain or trace length
  UniverseTooLarge,  // universe exceeds the configured cap
  FusionCapExceeded, // too many contracts for subset enumeration
  ProfileMismatch,   // operation requires equal profiles
  CompositionClash,  // controlled/local port owned by both operands
  NotReceptive,      // implementation behavior rejects an offered history
  ParseError,        // lexical or syntax error (carries line/column)
  TypeError,         // ill-typed expression
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

}  // namespace hrc

#endif  // HRC_ERROR_HPP
