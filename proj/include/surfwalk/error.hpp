#ifndef SURFWALK_ERROR_HPP_
#define SURFWALK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace surfwalk {

  enum class ErrorKind {
    invalid_argument,      // bad genus, degree, parameter or config
    insufficient_radius,   // ball too small for the requested exact check
    certification_failure, // a finite check contradicted a proven property
    convergence,           // iterative method did not converge
    internal,              // an algebraic identity or invariant failed
    resource_cap           // vertex cap exceeded
  };

  // Process exit code associated with each error kind (see the CLI docs).
  constexpr int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::invalid_argument:
        return 64;
      case ErrorKind::insufficient_radius:
        return 64;
      case ErrorKind::certification_failure:
        return 1;
      case ErrorKind::convergence:
        return 70;
      case ErrorKind::internal:
        return 70;
      case ErrorKind::resource_cap:
        return 75;
    }
    return 70;
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& what) {
    throw Error(kind, what);
  }

}  // namespace surfwalk

#endif  // SURFWALK_ERROR_HPP_
