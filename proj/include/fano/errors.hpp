#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/* Base class for all domain errors raised by the library.  The CLI maps
   ParseError to the usage exit code and every other Error to the
   hypothesis-violation exit code. */
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : Error {
  using Error::Error;
};

/* exact division by (t - root) requested but p(root) != 0 */
struct RootMismatch : Error {
  using Error::Error;
};

struct InvalidIndex : Error {
  using Error::Error;
};

struct InvalidDegree : Error {
  using Error::Error;
};

struct InvalidDelta : Error {
  using Error::Error;
};

struct NegativePlurigenus : Error {
  using Error::Error;
};

struct HypothesisViolated : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

}  // namespace fano
