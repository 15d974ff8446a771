#ifndef NEFCALC_ERRORS_HPP
#define NEFCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nefcalc {

// Codes mirror the extern-C status values in nefcalc.h.
enum ErrorCode {
  ERR_INVALID_INPUT = 2,
  ERR_PARSE = 3,
  ERR_DEGENERATE_INPUT = 4,
  ERR_NOT_BIG = 5,
  ERR_UNREALIZABLE_SEQUENCE = 6,
  ERR_DOMAIN = 7,
  ERR_INTERNAL = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error(ERR_INVALID_INPUT, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ERR_PARSE, w) {}
};
struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& w)
      : Error(ERR_DEGENERATE_INPUT, w) {}
};
struct NotBig : Error {
  explicit NotBig(const std::string& w) : Error(ERR_NOT_BIG, w) {}
};
struct UnrealizableSequence : Error {
  explicit UnrealizableSequence(const std::string& w)
      : Error(ERR_UNREALIZABLE_SEQUENCE, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ERR_DOMAIN, w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(ERR_INTERNAL, w) {}
};

}  // namespace nefcalc

#endif
