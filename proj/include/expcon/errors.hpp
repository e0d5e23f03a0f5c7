#pragma once

#include <stdexcept>
#include <string>

namespace expcon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact arithmetic
struct ZeroDenominator : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// partitions / permutations
struct CellOutOfRange : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BadComposition : Error { using Error::Error; };

// hecke
struct RankMismatch : Error { using Error::Error; };
struct InconsistentPropagation : Error { using Error::Error; };

// symmetric functions
struct UnsupportedDegree : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NonPolynomialResult : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };

// counting
struct InternalMismatch : Error { using Error::Error; };

// finite-field oracle
struct Singular : Error { using Error::Error; };
struct ScaleExceeded : Error { using Error::Error; };

} // namespace expcon
