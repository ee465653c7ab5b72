#pragma once

#include <stdexcept>
#include <string>

namespace qpm {

enum class Errc {
  PointOutOfDomain,
  GridRequired,
  NegativeRadius,
  EmptyTail,
  NegativeEntry,
  NonzeroDiagonal,
  EmptySet,
  EmptyImage,
  NegativeArgument,
  RatioOutOfRange,
  NoFeasibleSuccessor,
  TraceTooShort,
  SchemaError,
  UnknownVariant,
  UnknownRule,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace qpm
