#pragma once

#include <stdexcept>
#include <string>

namespace qmana {

enum class ErrorKind {
  InvalidDimension,
  InvalidState,
  ImaginaryResidue,
  UnknownState,
  BadParamCount,
  ParamOutOfRange,
  NotBipartite,
  DimensionTooLarge,
  SingularG,
  UnknownGate,
  BetaDeltaZero,
  AlphaOne,
  NegativeEigenvalue,
  BadParams,
  Parse,
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

}  // namespace qmana
