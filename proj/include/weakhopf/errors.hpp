#pragma once

#include <stdexcept>
#include <string>

namespace weakhopf {

// Base class for every error this library throws on misuse or on a failed
// internal consistency assertion. Failed *axiom checks* on user data are
// values (AxiomReport entries), not exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct NotIdempotent : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct IdempotencyFailed : Error {
    using Error::Error;
};
struct FrobeniusCheckFailed : Error {
    using Error::Error;
};
struct ConstraintNotInvertible : Error {
    using Error::Error;
};
struct CoherenceFailed : Error {
    using Error::Error;
};
struct BimoduleLawFailed : Error {
    using Error::Error;
};
struct NotAMorphism : Error {
    using Error::Error;
};
struct WhmVerificationFailed : Error {
    using Error::Error;
};
struct InvalidGroupoid : Error {
    using Error::Error;
};
struct InvalidMonoid : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct InvalidBraid : Error {
    using Error::Error;
};
struct ModuleLawFailed : Error {
    using Error::Error;
};

}  // namespace weakhopf
