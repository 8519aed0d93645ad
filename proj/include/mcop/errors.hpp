#pragma once

#include <stdexcept>
#include <string>

namespace mcop {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Poset construction / queries.
struct CycleError : Error { using Error::Error; };
struct UnknownElement : Error { using Error::Error; };
struct NotRegularizable : Error { using Error::Error; };

// Decompositions.
struct NotAPartition : Error { using Error::Error; };

// Inequality systems.
struct EmptyMarking : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct Unbounded : Error { using Error::Error; };

// Lattice-point operations.
struct InvalidOrderPoint : Error { using Error::Error; };
struct NotInPolytope : Error { using Error::Error; };

// Transfer maps and moves.
struct NotInDomain : Error { using Error::Error; };
struct IsStarElement : Error { using Error::Error; };
struct NotAdmissibleAfterMove : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct NoPathFound : Error { using Error::Error; };

// Face counting.
struct RegularityRequired : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

} // namespace mcop
