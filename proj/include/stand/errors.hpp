#pragma once

#include <stdexcept>
#include <string>

namespace stand {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };

// reflection-core
struct DegeneratePoint : Error { using Error::Error; };
struct NoDilation : Error { using Error::Error; };

// antilinear / standard-subspace
struct SingularOperator : Error { using Error::Error; };
struct NotStandard : Error { using Error::Error; };
struct ModularRelationViolated : Error { using Error::Error; };
struct NotSkew : Error { using Error::Error; };

// stand-geometry
struct InvertibilityConstraintViolated : Error { using Error::Error; };
struct NotDilationInvariant : Error {
    double fitted_alpha;
    NotDilationInvariant(const std::string& msg, double alpha)
        : Error(msg), fitted_alpha(alpha) {}
};

// jordan / conformal / semigroup
struct AlgebraMismatch : Error { using Error::Error; };
struct SingularElement : Error { using Error::Error; };
struct PointOutsideDomain : Error { using Error::Error; };
struct NotInG1 : Error { using Error::Error; };
struct ConePreconditionViolated : Error { using Error::Error; };

// affine-flow
struct ShiftOutOfRange : Error { using Error::Error; };
struct SpectralOverflow : Error { using Error::Error; };

// cli
struct ConfigError : Error { using Error::Error; };

} // namespace stand
