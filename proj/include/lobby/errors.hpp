#ifndef LOBBY_ERRORS_HPP
#define LOBBY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lobby {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance failed structural validation.
struct ValidationError : Error {
    enum class Code {
        ShapeMismatch,
        NonMonotoneCost,
        NonzeroBaseCost,
        MissingAgendaSideCost,
    };

    ValidationError(Code c, const std::string& what) : Error(what), code(c) {}

    Code code;
};

/// An issue cannot be won no matter how much is spent.
struct InfeasibleIssue : Error {
    explicit InfeasibleIssue(const std::string& what) : Error(what) {}
};

/// Cover number undefined: required raise exceeds total headroom.
struct Infeasible : Error {
    explicit Infeasible(const std::string& what) : Error(what) {}
};

/// Enumeration search space exceeds the configured limit.
struct InstanceTooLarge : Error {
    explicit InstanceTooLarge(const std::string& what) : Error(what) {}
};

/// Integer arithmetic would overflow 64 bits.
struct ArithmeticOverflow : Error {
    explicit ArithmeticOverflow(const std::string& what) : Error(what) {}
};

/// A micro plan target moves a probability opposite the agenda.
struct WrongDirection : Error {
    explicit WrongDirection(const std::string& what) : Error(what) {}
};

/// Malformed instance file.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace lobby

#endif
