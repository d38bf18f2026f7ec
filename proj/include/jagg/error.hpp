#pragma once

#include <stdexcept>
#include <string>

namespace jagg {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller asked for something that does not apply to the input
// (wrong strategy for a clause class, non-normalized instance, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its configured budget; the question stays open.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace jagg
