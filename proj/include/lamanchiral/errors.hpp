#pragma once

#include <stdexcept>
#include <string>

namespace lamanchiral {

// Input-level failures. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LAMANCHIRAL_ERROR(Name)    \
  struct Name : Error {            \
    using Error::Error;            \
  }

LAMANCHIRAL_ERROR(DisconnectedGraph);
LAMANCHIRAL_ERROR(TooFewVertices);
LAMANCHIRAL_ERROR(MissingEdge);
LAMANCHIRAL_ERROR(MissingVertex);
LAMANCHIRAL_ERROR(DuplicateVertex);
LAMANCHIRAL_ERROR(NotTypeIPrime);
LAMANCHIRAL_ERROR(SelfLoop);
LAMANCHIRAL_ERROR(NonpositiveOrder);
LAMANCHIRAL_ERROR(TruncationTooLarge);
LAMANCHIRAL_ERROR(MissingParentEdge);
LAMANCHIRAL_ERROR(InvalidInput);

#undef LAMANCHIRAL_ERROR

// An identity that should hold exactly did not. The CLI maps this to exit code 1.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lamanchiral
