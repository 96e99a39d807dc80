#ifndef QH_ERRORS_HPP
#define QH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qh {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad permutation images, bad file syntax, non-prime p, ...
class InputError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold (e.g. subgroup not normal).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configured size bound would be exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

} // namespace qh

#endif // QH_ERRORS_HPP
