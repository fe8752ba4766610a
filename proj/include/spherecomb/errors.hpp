#pragma once

#include <stdexcept>
#include <string>

namespace sc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// duplicate vertex inside a facet, negative label
struct MalformedFace : Error { using Error::Error; };
// face not present in the complex
struct AbsentFace : Error { using Error::Error; };
// edge order is not a permutation of the original edges
struct BadOrder : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct NotReciprocal : Error { using Error::Error; };
struct DivisibilityError : Error { using Error::Error; };
// gamma_0 != 1
struct NormalizationError : Error { using Error::Error; };
// link condition fails where it is required
struct PreconditionError : Error {
  PreconditionError(const std::string& what, std::string edge)
      : Error(what), violating_edge(std::move(edge)) {}
  std::string violating_edge;
};
// enumeration guard exceeded
struct SizeGuard : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace sc
