#pragma once

#include <stdexcept>
#include <string>

namespace eireg {

enum class ErrorKind {
  NotWeaklyDecreasing,
  NegativePart,
  InvalidParams,
  NodeOutsideDiagram,
  SizeMismatch,
  TooFewBeads,
  InvalidAbacus,
  NoHook,
  InternalMoveConflict,
  PositionOccupied,
  NoBeadAbove,
  ParseError,
  NoRepresentative,
  MultipleRepresentatives,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eireg
