#pragma once

#include <stdexcept>
#include <string>

namespace frameforge {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

#define FRAMEFORGE_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                                 \
    explicit Name(const std::string& what_arg) : Error(what_arg) {}     \
  }

// Matrix-level preconditions.
FRAMEFORGE_DEFINE_ERROR(NotSquareError);
FRAMEFORGE_DEFINE_ERROR(NotHermitianError);
FRAMEFORGE_DEFINE_ERROR(NonFiniteEntryError);
FRAMEFORGE_DEFINE_ERROR(ZeroMatrixError);
FRAMEFORGE_DEFINE_ERROR(NotPsdError);
FRAMEFORGE_DEFINE_ERROR(InvalidToleranceError);
FRAMEFORGE_DEFINE_ERROR(DimensionMismatchError);

// Field evaluation and sampling.
FRAMEFORGE_DEFINE_ERROR(NotPsdAtPointError);
FRAMEFORGE_DEFINE_ERROR(EmptyGridError);

// Classification and certification.
FRAMEFORGE_DEFINE_ERROR(BadShapeError);
FRAMEFORGE_DEFINE_ERROR(NotAFrameError);
FRAMEFORGE_DEFINE_ERROR(RankDropError);
FRAMEFORGE_DEFINE_ERROR(UnsupportedInputClassError);

// Scenario I/O.
FRAMEFORGE_DEFINE_ERROR(UnknownScenarioError);
FRAMEFORGE_DEFINE_ERROR(ParseError);

// A cross-check that should hold for sane inputs failed; indicates a bug
// or a numerically hostile input, never a routine rejection.
FRAMEFORGE_DEFINE_ERROR(InternalCheckError);

#undef FRAMEFORGE_DEFINE_ERROR

}  // namespace frameforge
