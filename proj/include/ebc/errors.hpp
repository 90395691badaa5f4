#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ebc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad ids, non-ideals, bad group specs).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what), requested_(requested), cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ebc
