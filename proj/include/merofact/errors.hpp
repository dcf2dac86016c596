#pragma once

#include <stdexcept>
#include <string>

namespace merofact {

// Base of every structured error. `kind()` is the stable machine-readable tag
// surfaced by the CLI as JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define MEROFACT_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                       \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

MEROFACT_DEFINE_ERROR(PoleProximity);
MEROFACT_DEFINE_ERROR(QuadratureFailure);
MEROFACT_DEFINE_ERROR(DomainError);
MEROFACT_DEFINE_ERROR(ContourError);
MEROFACT_DEFINE_ERROR(NonFinite);
MEROFACT_DEFINE_ERROR(DivergenceDetected);
MEROFACT_DEFINE_ERROR(InsufficientCoefficients);
MEROFACT_DEFINE_ERROR(IndexError);
MEROFACT_DEFINE_ERROR(ConvergenceFailure);
MEROFACT_DEFINE_ERROR(RangeError);
MEROFACT_DEFINE_ERROR(NotEulerForm);
MEROFACT_DEFINE_ERROR(RealFormUnavailable);
MEROFACT_DEFINE_ERROR(MethodInapplicable);
MEROFACT_DEFINE_ERROR(UnknownFunction);
MEROFACT_DEFINE_ERROR(Unsupported);
MEROFACT_DEFINE_ERROR(Degenerate);

#undef MEROFACT_DEFINE_ERROR

// Parse error carrying the offending position (0-based byte offset).
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error("SyntaxError", what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace merofact
