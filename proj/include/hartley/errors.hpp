#pragma once

#include <stdexcept>

namespace hartley {

// Base class for every validation failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGrid : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct InvalidExponent : Error { using Error::Error; };
struct InvalidTime : Error { using Error::Error; };
struct InvalidFunction : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct NodeNotOnGrid : Error { using Error::Error; };
struct ExponentRelationViolated : Error { using Error::Error; };
struct SingularSymbol : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

}  // namespace hartley
