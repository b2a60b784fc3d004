#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgring {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentations, dimension mismatches, violated preconditions.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A configured bound (box volume, Apery cap, element count) was exceeded.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// Checked 64-bit arithmetic would have wrapped.
class ArithmeticOverflow : public ResourceLimit {
public:
  using ResourceLimit::ResourceLimit;
};

class NotSimplicial : public Error {
public:
  using Error::Error;
};

/// Raised by canonical-module operations on non-CM input. Carries the label
/// of a coset of G(H)/ZE holding more than one Apery element.
class NotCohenMacaulay : public Error {
public:
  NotCohenMacaulay(std::string what, std::vector<std::int64_t> coset)
      : Error(std::move(what)), coset_(std::move(coset)) {}

  const std::vector<std::int64_t> &coset() const noexcept { return coset_; }

private:
  std::vector<std::int64_t> coset_;
};

/// A cross-check between two routes disagreed. Always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace sgring
