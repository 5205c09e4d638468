#pragma once

#include <stdexcept>
#include <string>

namespace slicebench {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A string is not a member of a domain, or a domain has the wrong shape for
/// the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A restriction leaves no consistent domain member.
class EmptyRestrictionError : public Error {
 public:
  using Error::Error;
};

/// A configured size or state cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or argument.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An adversary produced an answer that no domain member is consistent with.
class AdversaryInvalidError : public Error {
 public:
  using Error::Error;
};

}  // namespace slicebench
