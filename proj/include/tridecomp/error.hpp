#ifndef TRIDECOMP_ERROR_HPP
#define TRIDECOMP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tridecomp {

enum class ErrorKind {
  InvalidArgument,
  SizeExceeded,
  Parse,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tridecomp

#endif
