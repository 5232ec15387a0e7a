#pragma once

#include <stdexcept>
#include <string>

namespace howson {

  // Root of every error the library throws on purpose.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A letter or word does not fit the alphabet it is used with.
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  // Malformed text input (words, specs, expressions, certificates).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its documented precondition.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  // Checked integer arithmetic left the representable range.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  // The hypotheses of the construction do not hold for the input.
  class NotApplicableError : public Error {
   public:
    using Error::Error;
  };

  // A construction step produced something that failed its own check.
  class ConstructionError : public Error {
   public:
    using Error::Error;
  };

  // Too many endomorphism applications inside one HNN operation.
  class DepthLimitError : public Error {
   public:
    using Error::Error;
  };

  class InstanceMismatchError : public Error {
   public:
    using Error::Error;
  };

  // Finite-index subgroups of a free group have no free complement.
  class NoComplementError : public Error {
   public:
    using Error::Error;
  };

  class InvalidWitnessError : public Error {
   public:
    using Error::Error;
  };

  class DegeneratePartError : public Error {
   public:
    using Error::Error;
  };

}  // namespace howson
