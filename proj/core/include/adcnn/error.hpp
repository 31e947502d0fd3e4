#pragma once

#include <stdexcept>
#include <string>

namespace adcnn {

/// Base for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error { using Error::Error; };       // tensor dimension mismatch
struct GeometryError : Error { using Error::Error; };    // conv/pool geometry underflow
struct IndexError : Error { using Error::Error; };       // out-of-range access
struct FormatError : Error { using Error::Error; };      // malformed file bytes
struct DataError : Error { using Error::Error; };        // non-finite or ill-formed values
struct ConfigError : Error { using Error::Error; };      // unusable configuration
struct MismatchError : Error { using Error::Error; };    // checkpoint vs. network disagreement
struct DivergenceError : Error { using Error::Error; };  // non-finite training state

}  // namespace adcnn
