#pragma once

#include <stdexcept>
#include <string>

namespace coordsolve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments (bad index, invalid parameter vector).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Game documents that do not match the schema; `path` names the offending node.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An operation's precondition does not hold for this game.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested horizon is below what the graph admits.
class InfeasibleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A configured enumeration or evaluation cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A self-check failed; indicates a solver bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace coordsolve
