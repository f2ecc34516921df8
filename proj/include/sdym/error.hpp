#pragma once

#include <stdexcept>
#include <string>

namespace sdym {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// basis is linearly dependent or a bracket falls outside its span
struct BasisError : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t pos;
    ParseError(size_t p, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// a Fréchet derivative was requested but the characteristic lacks Q or Phi
struct MissingCharacteristic : Error {
    using Error::Error;
};

// series evaluation hit an atom with no binding
struct UnresolvedAtom : Error {
    using Error::Error;
};

// the two defining relations of a nonlocal atom disagree on a coefficient;
// happens exactly when the source expression is not a symmetry
struct ReconstructionConflict : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

}  // namespace sdym
