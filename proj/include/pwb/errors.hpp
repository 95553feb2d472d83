#pragma once

#include <stdexcept>
#include <string>

namespace pwb {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid shape parameters or a query point off the requested wall.
class geometry_error : public error {
public:
    using error::error;
};

/// Ray-boundary intersection search failed (no positive root found).
class collision_error : public error {
public:
    using error::error;
};

/// Panel doubling failed to converge the exclusion-region integrals.
class quadrature_error : public error {
public:
    using error::error;
};

/// Dense symmetric eigensolve rejected its input or did not converge.
class solver_error : public error {
public:
    using error::error;
};

/// Operation requires a spectrum free of flagged degeneracies.
class degeneracy_error : public error {
public:
    using error::error;
};

/// Bad input to a statistics routine (non-monotone, empty, too short).
class stats_error : public error {
public:
    using error::error;
};

/// Run-configuration parse or invariant failure.
class config_error : public error {
public:
    using error::error;
};

/// Filesystem or artifact-format failure.
class io_error : public error {
public:
    using error::error;
};

} // namespace pwb
